#include "pluri/search.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace pluri {

namespace {

int thread_count(int workers) {
    return workers > 0 ? workers : omp_get_max_threads();
}

VerifyReport merge(std::string range, std::vector<VerifyReport>& blocks) {
    VerifyReport out;
    out.range = std::move(range);
    for (auto& block : blocks) {
        out.cases += block.cases;
        std::move(block.violations.begin(), block.violations.end(),
                  std::back_inserter(out.violations));
    }
    return out;
}

// One order r: the definition sum is carried incrementally in m.
VerifyReport prop26_block(std::int64_t r_small, std::int64_t m_max) {
    VerifyReport block;
    const Int r = r_small;
    const Int b = r == 1 ? Int(0) : mod_inverse(1, r);
    Int numer = 0;  // sum_{k<m} bk(r - bk), bk = b*k mod r
    Int bk = 0;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        if (m >= 2) {
            bk = residue(bk + b, r);
            numer += bk * (r - bk);
        }
        ++block.cases;
        Rat lhs(numer, 2 * r);
        Rat rhs = contribution_closed_1(r, m);
        if (lhs != rhs) {
            block.violations.push_back({{{"r", r}, {"m", Int(m)}}, lhs, rhs});
        }
    }
    return block;
}

// One alpha. rhs_numer[beta][m] holds 2*beta*l(1/beta(1,-1,1), m).
VerifyReport prop27_block(std::int64_t alpha, const std::vector<std::vector<Int>>& rhs_numer) {
    VerifyReport block;
    const std::int64_t m_top = (alpha + 1) / 2;
    const Int A = alpha;
    for (std::int64_t a = 1; a < alpha; ++a) {
        if (gcd(Int(a), A) != 1) {
            continue;
        }
        const Int b = mod_inverse(a, A);
        Int numer = 0;  // 2*alpha*l(1/alpha(a,-a,1), m)
        Int bk = 0;
        for (std::int64_t m = 2; m <= m_top; ++m) {
            bk = residue(bk + b, A);
            numer += bk * (A - bk);
            for (std::int64_t beta = 0; beta <= alpha; ++beta) {
                ++block.cases;
                if (beta <= 1) {
                    continue;  // rhs = 0 <= lhs
                }
                // numer/(2 alpha) >= rhs/(2 beta)
                const Int& rhs = rhs_numer[static_cast<std::size_t>(beta)][static_cast<std::size_t>(m)];
                if (numer * beta < rhs * A) {
                    block.violations.push_back(
                        {{{"alpha", A}, {"a", Int(a)}, {"beta", Int(beta)}, {"m", Int(m)}},
                         Rat(numer, 2 * A),
                         Rat(rhs, 2 * beta)});
                }
            }
        }
    }
    return block;
}

}  // namespace

VerifyReport verify_prop26(const Int& r_max, const Int& m_max, int workers) {
    if (r_max < 1 || m_max < 0) {
        throw std::domain_error("verify_prop26: need r_max >= 1 and m_max >= 0");
    }
    const std::int64_t rs = to_small(r_max, "r_max");
    const std::int64_t ms = to_small(m_max, "m_max");
    std::vector<VerifyReport> blocks(static_cast<std::size_t>(rs));

#pragma omp parallel for schedule(dynamic) num_threads(thread_count(workers))
    for (std::int64_t r = 1; r <= rs; ++r) {
        blocks[static_cast<std::size_t>(r - 1)] = prop26_block(r, ms);
    }
    return merge("r in [1," + to_string(r_max) + "], m in [0," + to_string(m_max) + "]", blocks);
}

VerifyReport verify_prop27(const Int& alpha_max, int workers) {
    if (alpha_max < 1) {
        throw std::domain_error("verify_prop27: need alpha_max >= 1");
    }
    const std::int64_t top = to_small(alpha_max, "alpha_max");
    const std::int64_t m_cap = (top + 1) / 2;

    std::vector<std::vector<Int>> rhs_numer(static_cast<std::size_t>(top + 1));
    for (std::int64_t beta = 2; beta <= top; ++beta) {
        auto& row = rhs_numer[static_cast<std::size_t>(beta)];
        row.assign(static_cast<std::size_t>(std::max<std::int64_t>(m_cap, 1) + 1), Int(0));
        Int numer = 0;
        for (std::int64_t m = 2; m <= m_cap; ++m) {
            std::int64_t k = (m - 1) % beta;  // b = 1
            numer += Int(k) * (beta - k);
            row[static_cast<std::size_t>(m)] = numer;
        }
    }

    std::vector<VerifyReport> blocks(static_cast<std::size_t>(top));
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(workers))
    for (std::int64_t alpha = 1; alpha <= top; ++alpha) {
        blocks[static_cast<std::size_t>(alpha - 1)] = prop27_block(alpha, rhs_numer);
    }
    return merge("alpha in [1," + to_string(alpha_max) + "]", blocks);
}

std::vector<Match> match_baskets(const Int& chi, const std::vector<Sample>& samples,
                                 const Int& r_max, const Int& n_max, int workers) {
    if (std::none_of(samples.begin(), samples.end(), [](const Sample& s) { return s.m >= 2; })) {
        throw std::domain_error("match_baskets: need a sample with m >= 2");
    }
    Int m_top_big = 0;
    for (const auto& s : samples) {
        if (s.m < 0) {
            throw std::domain_error("match_baskets: sample m must be >= 0");
        }
        m_top_big = std::max(m_top_big, s.m);
    }
    const auto m_top = static_cast<std::size_t>(to_small(m_top_big, "sample m"));
    const auto pivot = *std::find_if(samples.begin(), samples.end(),
                                     [](const Sample& s) { return s.m >= 2; });
    const auto pivot_m = static_cast<std::size_t>(pivot.m);

    // l(Q, m) for each canonical type and m = 0..m_top
    const auto types = canonical_types(r_max);
    std::map<QuotientSingularity, std::size_t> type_index;
    std::vector<std::vector<Rat>> table(types.size());
    for (std::size_t t = 0; t < types.size(); ++t) {
        type_index.emplace(types[t], t);
        for (std::size_t m = 0; m <= m_top; ++m) {
            table[t].push_back(contribution(types[t], Int(m)));
        }
    }
    std::vector<Rat> k3_coef(m_top + 1);
    std::vector<Rat> chi_term(m_top + 1);
    for (std::size_t m = 0; m <= m_top; ++m) {
        k3_coef[m] = k3_coefficient(Int(m));
        chi_term[m] = Rat(chi_coefficient(Int(m)) * chi);
    }

    const auto baskets = enumerate_baskets(r_max, n_max);
    std::vector<std::optional<Rat>> found(baskets.size());

#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count(workers))
    for (std::size_t i = 0; i < baskets.size(); ++i) {
        std::vector<Rat> basket_term(m_top + 1);
        for (const auto& [q, count] : baskets[i].entries()) {
            const auto& row = table[type_index.at(q)];
            for (std::size_t m = 0; m <= m_top; ++m) {
                basket_term[m] += row[m] * Rat(count);
            }
        }
        Rat k3 = (Rat(pivot.value) - chi_term[pivot_m] - basket_term[pivot_m]) / k3_coef[pivot_m];
        if (k3.sign() <= 0) {
            continue;
        }
        bool ok = true;
        for (const auto& s : samples) {
            const auto m = static_cast<std::size_t>(s.m);
            if (k3_coef[m] * k3 + chi_term[m] + basket_term[m] != Rat(s.value)) {
                ok = false;
                break;
            }
        }
        for (std::size_t m = 0; ok && m <= m_top; ++m) {
            ok = (k3_coef[m] * k3 + chi_term[m] + basket_term[m]).is_integer();
        }
        if (ok) {
            found[i] = std::move(k3);
        }
    }

    std::vector<Match> out;
    for (std::size_t i = 0; i < baskets.size(); ++i) {
        if (found[i]) {
            out.push_back({baskets[i], *found[i]});
        }
    }
    return out;
}

}  // namespace pluri
