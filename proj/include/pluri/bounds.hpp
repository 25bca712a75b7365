#pragma once

// Explicit pluricanonical birationality bounds for 3-folds of general type.
//
// Given a cap C >= 1 on chi(O_Y):
//   R  = lcm(2, 3, ..., 26C - 1)
//   m1 = 18R + 1      (index of the canonical model divides R)
//   m2 = 143C + 5     (otherwise h^0(13C K) >= 2, then 11l + 5 with l = 13C)
//   m  = lcm(m1, m2)  works in both cases.

#include "pluri/basket.hpp"
#include "pluri/exactmath.hpp"
#include "pluri/plurigenus.hpp"

#include <array>
#include <optional>
#include <string>

namespace pluri {

/// 18l + 1: birational once l is a multiple of the canonical-model index.
Int ekl_bound(const Int& l);

/// 11l + 5: birational once h^0(lK) >= 2.
Int kollar_bound(const Int& l);

/// Cap on |chi(O_Y)| for every Y dominated by X, from the Hodge numbers
/// h^0(X, Omega^i), i = 0..3. This is just their sum.
Int chi_cap(const std::array<Int, 4>& hodge);

struct BoundReport {
    Int C;
    Int R;
    Int m1;
    Int m2;
    Int m;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport severi_bound(const Int& C);

/// All five fields as decimal strings.
std::string bound_report_to_json(const BoundReport& report);

/// (52C^2 - 15C - 1)/24, the lower bound on h^0(13C K) when some basket
/// order is >= 26C.
Rat sections_lower_bound(const Int& C);

enum class BoundCase {
    IndexDividesR,  // Case 1
    TwoSections,    // Case 2
};

struct Classification {
    BoundCase which;
    Int witness;  // the basket index (Case 1) or a basket order r >= 26C (Case 2)
    Int bound;    // m1 or m2
    // Strict mode only: h^0(13C K) evaluated from full invariants.
    std::optional<Rat> sections;
};

/// Decides the case purely by whether index(basket) divides R(C). Throws
/// std::logic_error if index does not divide R yet no order reaches 26C.
Classification classify(const Int& C, const Basket& basket);
/// Same, reusing R and the bounds of an existing report.
Classification classify(const BoundReport& bounds, const Basket& basket);

/// classify() on inv.basket, additionally evaluating h^0(13C K) exactly. The
/// hypotheses K^3 > 0 and chi <= C are checked (std::domain_error); in Case 2
/// a section count below 2 throws std::logic_error.
Classification classify_strict(const Int& C, const CanonicalInvariants& inv);

/// "Case1 bound=... witness=..." / "Case2 ...", plus " sections=..." in strict mode.
std::string format_classification(const Classification& c);
std::string classification_to_json(const Classification& c);

}  // namespace pluri
