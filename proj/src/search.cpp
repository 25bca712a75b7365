#include "pluri/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace pluri {

namespace {

void enumerate_from(const std::vector<QuotientSingularity>& types, std::size_t start,
                    std::int64_t remaining, Basket& current,
                    const std::function<void(const Basket&)>& visit) {
    visit(current);
    if (remaining == 0) {
        return;
    }
    for (std::size_t i = start; i < types.size(); ++i) {
        Basket next = current;
        next.add(types[i]);
        enumerate_from(types, i, remaining - 1, next, visit);
    }
}

nlohmann::json basket_json(const Basket& basket) {
    return nlohmann::json::parse(basket_to_json(basket))["basket"];
}

}  // namespace

std::vector<QuotientSingularity> canonical_types(const Int& r_max) {
    std::vector<QuotientSingularity> out;
    for (Int r = 2; r <= r_max; ++r) {
        for (Int a = 1; 2 * a <= r; ++a) {
            if (gcd(a, r) == 1) {
                out.emplace_back(r, a);
            }
        }
    }
    return out;
}

void for_each_basket(const Int& r_max, const Int& n_max,
                     const std::function<void(const Basket&)>& visit) {
    if (r_max < 2) {
        throw std::domain_error("enumerate_baskets: r_max must be >= 2, got " + to_string(r_max));
    }
    if (n_max < 0) {
        throw std::domain_error("enumerate_baskets: n_max must be >= 0, got " + to_string(n_max));
    }
    const auto types = canonical_types(r_max);
    Basket empty;
    enumerate_from(types, 0, to_small(n_max, "n_max"), empty, visit);
}

std::vector<Basket> enumerate_baskets(const Int& r_max, const Int& n_max) {
    std::vector<Basket> out;
    for_each_basket(r_max, n_max, [&](const Basket& b) { out.push_back(b); });
    return out;
}

FitResult fit_invariants(const Int& chi, const Basket& basket, const std::vector<Sample>& samples) {
    auto pivot = std::find_if(samples.begin(), samples.end(),
                              [](const Sample& s) { return s.m >= 2; });
    if (pivot == samples.end()) {
        throw std::domain_error("fit_invariants: need a sample with m >= 2 (the K^3 coefficient "
                                "vanishes for m = 0, 1)");
    }
    FitResult out;
    // P_m = k3 * c(m) - (2m-1) chi + l(B, m), solved for k3
    out.k3 = (Rat(pivot->value) - Rat(chi_coefficient(pivot->m) * chi) -
              contribution(basket, pivot->m)) /
             k3_coefficient(pivot->m);
    CanonicalInvariants inv{out.k3, chi, basket};
    for (const auto& s : samples) {
        Rat got = chi_mK(inv, s.m);
        if (got != Rat(s.value)) {
            out.residuals.push_back({s.m, Rat(s.value), got});
        }
    }
    return out;
}

std::vector<Sample> parse_samples(std::string_view text) {
    std::vector<Sample> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        auto item = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                    : end - start);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("bad sample '" + std::string(item) + "': expected \"m:P\"");
        }
        try {
            out.push_back({parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1))});
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("bad sample '" + std::string(item) + "': " + e.what());
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [name, value] : v.params) {
            params[name] = to_string(value);
        }
        violations.push_back({{"params", params}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}});
    }
    return nlohmann::json{{"range", report.range},
                          {"cases", to_string(report.cases)},
                          {"violations", violations}}
        .dump();
}

std::string fit_to_json(const FitResult& fit) {
    nlohmann::json residuals = nlohmann::json::array();
    for (const auto& r : fit.residuals) {
        residuals.push_back(
            {{"m", to_string(r.m)}, {"expected", r.expected.str()}, {"got", r.got.str()}});
    }
    return nlohmann::json{{"k3", fit.k3.str()}, {"residuals", residuals}}.dump();
}

std::string matches_to_json(const std::vector<Match>& matches) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& match : matches) {
        rows.push_back({{"basket", basket_json(match.basket)}, {"k3", match.k3.str()}});
    }
    return nlohmann::json{{"matches", rows}}.dump();
}

// ---------------------------------------------------------------------------
// Serial references. Each case is evaluated independently from the public
// module functions, with no incremental state.

namespace serial {

VerifyReport verify_prop26(const Int& r_max, const Int& m_max) {
    if (r_max < 1 || m_max < 0) {
        throw std::domain_error("verify_prop26: need r_max >= 1 and m_max >= 0");
    }
    VerifyReport report;
    report.range = "r in [1," + to_string(r_max) + "], m in [0," + to_string(m_max) + "]";
    for (Int r = 1; r <= r_max; ++r) {
        QuotientSingularity q(r, r == 1 ? 0 : 1);
        for (Int m = 0; m <= m_max; ++m) {
            ++report.cases;
            Rat lhs = contribution_by_definition(q, m);
            Rat rhs = contribution_closed_1(r, m);
            if (lhs != rhs) {
                report.violations.push_back({{{"r", r}, {"m", m}}, lhs, rhs});
            }
        }
    }
    return report;
}

VerifyReport verify_prop27(const Int& alpha_max) {
    if (alpha_max < 1) {
        throw std::domain_error("verify_prop27: need alpha_max >= 1");
    }
    VerifyReport report;
    report.range = "alpha in [1," + to_string(alpha_max) + "]";
    for (Int alpha = 1; alpha <= alpha_max; ++alpha) {
        const Int m_top = (alpha + 1) / 2;
        for (Int a = 1; a < alpha; ++a) {
            if (gcd(a, alpha) != 1) {
                continue;
            }
            QuotientSingularity big(alpha, a);
            for (Int m = 2; m <= m_top; ++m) {
                Rat lhs = contribution_by_definition(big, m);
                for (Int beta = 0; beta <= alpha; ++beta) {
                    ++report.cases;
                    Rat rhs = beta <= 1 ? Rat{}
                                        : contribution_by_definition(QuotientSingularity(beta, 1), m);
                    if (lhs < rhs) {
                        report.violations.push_back(
                            {{{"alpha", alpha}, {"a", a}, {"beta", beta}, {"m", m}}, lhs, rhs});
                    }
                }
            }
        }
    }
    return report;
}

std::vector<Match> match_baskets(const Int& chi, const std::vector<Sample>& samples,
                                 const Int& r_max, const Int& n_max) {
    Int m_top = 0;
    for (const auto& s : samples) {
        m_top = std::max(m_top, s.m);
    }
    std::vector<Match> out;
    for_each_basket(r_max, n_max, [&](const Basket& basket) {
        FitResult fit = fit_invariants(chi, basket, samples);
        if (!fit.residuals.empty() || fit.k3.sign() <= 0) {
            return;
        }
        if (!integrality_check(CanonicalInvariants{fit.k3, chi, basket}, m_top).empty()) {
            return;
        }
        out.push_back({basket, fit.k3});
    });
    return out;
}

}  // namespace serial

}  // namespace pluri
