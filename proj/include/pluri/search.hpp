#pragma once

// Exhaustive verifiers, basket enumeration and the inverse problem of
// recovering (basket, K^3) from plurigenus samples.
//
// The verifiers and match_baskets come in two flavours: an OpenMP kernel in
// namespace pluri (split over the outer parameter, merged in block order) and
// a plain serial reference in pluri::serial. Both must return identical
// results for every worker count.

#include "pluri/basket.hpp"
#include "pluri/exactmath.hpp"
#include "pluri/plurigenus.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace pluri {

struct Violation {
    std::vector<std::pair<std::string, Int>> params;
    Rat lhs;
    Rat rhs;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    std::string range;
    Int cases = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct Sample {
    Int m;
    Int value;  // P_m
};

struct Residual {
    Int m;
    Rat expected;
    Rat got;
};

struct FitResult {
    Rat k3;
    std::vector<Residual> residuals;
};

struct Match {
    Basket basket;
    Rat k3;

    friend bool operator==(const Match&, const Match&) = default;
};

/// Closed form for 1/r(1,-1,1) against the definition sum, for
/// 1 <= r <= r_max and 0 <= m <= m_max. Cases: r_max * (m_max + 1).
/// workers <= 0 uses the OpenMP default.
VerifyReport verify_prop26(const Int& r_max, const Int& m_max, int workers = 0);

/// l(1/alpha(a,-a,1), m) >= l(1/beta(1,-1,1), m) for 1 <= alpha <= alpha_max,
/// a in [1, alpha) coprime to alpha, 0 <= beta <= alpha and
/// 2 <= m <= floor((alpha+1)/2). beta in {0, 1} stands for "no singularity".
VerifyReport verify_prop27(const Int& alpha_max, int workers = 0);

/// Canonical singularity types with 2 <= r <= r_max, ordered by (r, a).
std::vector<QuotientSingularity> canonical_types(const Int& r_max);

/// Visits every basket of canonical types with r <= r_max and total
/// multiplicity <= n_max, in lexicographic order of the sorted entry list
/// (so the empty basket comes first and every basket precedes its extensions).
void for_each_basket(const Int& r_max, const Int& n_max,
                     const std::function<void(const Basket&)>& visit);
std::vector<Basket> enumerate_baskets(const Int& r_max, const Int& n_max);

/// Solves K^3 from the first sample with m >= 2, then re-evaluates every
/// sample. Throws std::domain_error if no sample has m >= 2.
FitResult fit_invariants(const Int& chi, const Basket& basket, const std::vector<Sample>& samples);

/// Every (basket, K^3) in enumerate_baskets(r_max, n_max) reproducing all
/// samples exactly with K^3 > 0 and integral chi(mK) for m up to the largest
/// sample. Ordered as the enumeration.
std::vector<Match> match_baskets(const Int& chi, const std::vector<Sample>& samples,
                                 const Int& r_max, const Int& n_max, int workers = 0);

namespace serial {

VerifyReport verify_prop26(const Int& r_max, const Int& m_max);
VerifyReport verify_prop27(const Int& alpha_max);
std::vector<Match> match_baskets(const Int& chi, const std::vector<Sample>& samples,
                                 const Int& r_max, const Int& n_max);

}  // namespace serial

/// "m:P,m:P,..." e.g. "2:-2,3:-3".
std::vector<Sample> parse_samples(std::string_view text);

std::string report_to_json(const VerifyReport& report);
std::string fit_to_json(const FitResult& fit);
std::string matches_to_json(const std::vector<Match>& matches);

}  // namespace pluri
