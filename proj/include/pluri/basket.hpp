#pragma once

// Cyclic quotient singularities of type 1/r(a,-a,1) and baskets of them.

#include "pluri/exactmath.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pluri {

/// Singularity C^3 / mu_r with weights (a, -a, 1). r = 1 (with a = 0) is the
/// smooth point and contributes nothing.
class QuotientSingularity {
public:
    /// Throws std::domain_error unless r >= 1, 0 <= a < r and gcd(a, r) = 1
    /// (a = 0 when r = 1).
    QuotientSingularity(Int r, Int a);

    const Int& r() const { return r_; }
    const Int& a() const { return a_; }

    friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;
    /// Ordered by r, then a.
    friend std::strong_ordering operator<=>(const QuotientSingularity& lhs,
                                            const QuotientSingularity& rhs);

private:
    Int r_;
    Int a_;
};

/// (r, min(a, r - a)). 1/r(a,-a,1) and 1/r(r-a,a-r,1) are the same type.
QuotientSingularity canonicalize(const QuotientSingularity& q);

/// Contribution l(Q, m) = sum_{k=1}^{m-1} bk(r - bk) / 2r with bk reduced mod r
/// and b the inverse of a mod r. Uses the full-period identity to stay O(r).
Rat contribution(const QuotientSingularity& q, const Int& m);

/// The same sum evaluated term by term, O(m). Reference for contribution().
Rat contribution_by_definition(const QuotientSingularity& q, const Int& m);

/// Closed form for the type 1/r(1,-1,1):
///   mbar(mbar-1)(3r+1-2 mbar)/12r + (r^2-1)/12 * floor(m/r),  mbar = m mod r.
Rat contribution_closed_1(const Int& r, const Int& m);

/// Finite multiset of singularities, stored by canonical form.
class Basket {
public:
    using Entries = std::map<QuotientSingularity, Int>;

    Basket() = default;

    /// Adds `count` copies of q (canonicalized). count must be >= 1.
    Basket& add(const QuotientSingularity& q, const Int& count = 1);

    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    /// Sum of multiplicities.
    Int size() const;
    /// Largest r present; 1 for the empty basket.
    Int max_r() const;

    /// Multiset union.
    friend Basket operator+(Basket lhs, const Basket& rhs);
    friend bool operator==(const Basket&, const Basket&) = default;

private:
    Entries entries_;
};

/// Sum over the basket of multiplicity * l(Q, m).
Rat contribution(const Basket& basket, const Int& m);

/// lcm of the orders r in the basket; 1 when empty.
Int index(const Basket& basket);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text form: ';'-separated "r,a" entries, each with an optional "k*" prefix,
/// e.g. "2,1;3*5,2;26,1". The empty string is the empty basket.
Basket parse_basket(std::string_view text);
/// A single "r,a" entry.
QuotientSingularity parse_singularity(std::string_view text);
std::string format_basket(const Basket& basket);

/// JSON form {"basket":[{"r":5,"a":2,"count":3}]}; "count" defaults to 1.
Basket basket_from_json(std::string_view json_text);
std::string basket_to_json(const Basket& basket);

}  // namespace pluri
