// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"
#include "pluri/basket.hpp"
#include "pluri/bounds.hpp"
#include "pluri/plurigenus.hpp"
#include "pluri/search.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

using pluri::Basket;
using pluri::CanonicalInvariants;
using pluri::Int;
using pluri::QuotientSingularity;
using pluri::Rat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, std::chrono::milliseconds budget,
               const std::function<Outcome()>& body) {
    auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (ms > budget) {
        o.pass = false;
        o.detail += " [over time budget " + std::to_string(budget.count()) + "ms]";
    }
    if (!o.pass) {
        ++failures;
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << " (" << ms.count()
              << "ms) " << o.detail << std::endl;
}

std::string str(const Int& v) {
    return pluri::to_string(v);
}

}  // namespace

int main() {
    using std::chrono::milliseconds;
    using std::chrono::seconds;

    criterion(1, "h0(13C K) chain at C=1", milliseconds(1000), [] {
        Rat lower = pluri::sections_lower_bound(1);
        bool ok = lower == Rat(3, 2) && lower == Rat(36, 24);
        auto verdict = pluri::classify_strict(1, {Rat(1, 26), 1, pluri::parse_basket("26,1")});
        ok = ok && verdict.sections && *verdict.sections == Rat(14) && *verdict.sections >= Rat(2);
        return Outcome{ok, "lower=" + lower.str() + " h0(13K)=" +
                               (verdict.sections ? verdict.sections->str() : "?") + " " +
                               pluri::format_classification(verdict)};
    });

    criterion(2, "closed form vs definition sum, r<=60 m<=200", seconds(10), [] {
        auto rep = pluri::verify_prop26(60, 200);
        bool ok = rep.ok() && rep.cases == 60 * 201;
        return Outcome{ok, "cases=" + str(rep.cases) +
                               " violations=" + std::to_string(rep.violations.size())};
    });

    criterion(3, "contribution inequality, alpha<=50", seconds(10), [] {
        auto rep = pluri::verify_prop27(50);
        return Outcome{rep.ok() && rep.cases > 0,
                       "cases=" + str(rep.cases) +
                           " violations=" + std::to_string(rep.violations.size())};
    });

    criterion(4, "bound constants at C=1", seconds(1), [] {
        auto rep = pluri::severi_bound(1);
        const Int R = oracle::prime_power_lcm(25);
        const std::uint64_t m1 = 481880599201ULL;
        const std::uint64_t g = std::gcd(m1, std::uint64_t{148});
        const Int m = Int(m1) * 148 / g;
        bool ok = rep.R == R && rep.R == Int(26771144400ULL) && rep.m1 == Int(m1) &&
                  rep.m2 == 148 && rep.m == m;
        // m1 rounds to 10^12 on a log scale: 10^11.5 <= m1 < 10^12.5
        const Int m1_sq = rep.m1 * rep.m1;
        ok = ok && m1_sq >= pow(Int(10), 23) && m1_sq < pow(Int(10), 25);
        return Outcome{ok, "R=" + str(rep.R) + " m1=" + str(rep.m1) + " m2=" + str(rep.m2) +
                               " m=" + str(rep.m) +
                               " (m1 ~ 10^12; m itself ~ 7.1*10^13, above that remark)"};
    });

    criterion(5, "structural identities of the plurigenus formula", seconds(30), [] {
        std::mt19937_64 rng(2026);
        auto types = pluri::canonical_types(40);
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            Basket b;
            int n = std::uniform_int_distribution<int>(0, 5)(rng);
            for (int j = 0; j < n; ++j) {
                b.add(types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)]);
            }
            Rat k3(std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng),
                   std::uniform_int_distribution<std::int64_t>(1, 1000)(rng));
            Int chi = std::uniform_int_distribution<std::int64_t>(-50, 50)(rng);
            CanonicalInvariants inv{k3, chi, b};
            bad += pluri::chi_mK(inv, 0) != Rat(chi);
            bad += pluri::chi_mK(inv, 1) != Rat(-chi);
        }
        std::int64_t pairs = 0;
        for (std::int64_t r = 2; r <= 40; ++r) {
            const Rat period(r * r - 1, 12);
            for (std::int64_t a = 1; a < r; ++a) {
                if (std::gcd(a, r) != 1) {
                    continue;
                }
                QuotientSingularity q(r, a);
                QuotientSingularity mirror(r, r - a);
                for (std::int64_t m = 0; m <= 3 * r; ++m) {
                    ++pairs;
                    Rat l = pluri::contribution_by_definition(q, m);
                    bad += l != pluri::contribution_by_definition(mirror, m);
                    if (m <= 2 * r) {
                        bad += pluri::contribution_by_definition(q, m + r) != l + period;
                    }
                }
            }
        }
        return Outcome{bad == 0, "400 endpoint checks, " + std::to_string(pairs) +
                                     " (r,a,m) symmetry/periodicity checks, failures=" +
                                     std::to_string(bad)};
    });

    criterion(6, "case-split soundness, |basket|<=2, r<=30C, C=1..3", seconds(60), [] {
        std::int64_t baskets = 0;
        std::int64_t case2 = 0;
        int bad = 0;
        for (std::int64_t C = 1; C <= 3; ++C) {
            const auto rep = pluri::severi_bound(C);
            pluri::for_each_basket(30 * C, 2, [&](const Basket& b) {
                ++baskets;
                const bool divides = rep.R % pluri::index(b) == 0;
                if (!divides && b.max_r() < 26 * C) {
                    ++bad;
                }
                auto c = pluri::classify(rep, b);
                if ((c.which == pluri::BoundCase::IndexDividesR) != divides) {
                    ++bad;
                }
                if (!divides) {
                    ++case2;
                    bad += c.bound != rep.m2 || c.witness < 26 * C;
                } else {
                    bad += c.bound != rep.m1;
                }
                bad += rep.m % c.bound != 0;
            });
        }
        return Outcome{bad == 0, "baskets=" + std::to_string(baskets) + " case2=" +
                                     std::to_string(case2) + " failures=" + std::to_string(bad)};
    });

    criterion(7, "inverse search round trip, 100 instances, r<=12", seconds(60), [] {
        std::mt19937_64 rng(7);
        const auto types = pluri::canonical_types(12);
        int recovered = 0;
        int instances = 0;
        std::int64_t draws = 0;
        while (instances < 100) {
            ++draws;
            Basket b;
            int n = std::uniform_int_distribution<int>(0, 3)(rng);
            for (int j = 0; j < n; ++j) {
                b.add(types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)]);
            }
            Int chi = std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
            Rat k3(Int(std::uniform_int_distribution<std::int64_t>(1, 60)(rng)), pluri::index(b));
            CanonicalInvariants inv{k3, chi, b};
            // only instances with integral plurigenera produce samples
            if (!pluri::integrality_check(inv, 6).empty()) {
                continue;
            }
            ++instances;
            std::vector<pluri::Sample> samples;
            for (const auto& [m, value] : pluri::plurigenus_table(inv, 6)) {
                if (m >= 2) {
                    samples.push_back({m, value.num()});
                }
            }
            for (const auto& match : pluri::match_baskets(chi, samples, 12, 3)) {
                if (match.basket == b && match.k3 == k3) {
                    ++recovered;
                    break;
                }
            }
        }
        return Outcome{recovered == instances, "recovered " + std::to_string(recovered) + "/" +
                                                   std::to_string(instances) + " (" +
                                                   std::to_string(draws) + " draws)"};
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
