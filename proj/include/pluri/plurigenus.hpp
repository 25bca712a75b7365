#pragma once

// Riemann-Roch plurigenus formula for projective 3-folds with
// canonical singularities:
//
//   chi(mK) = (2m-1) m (m-1) K^3 / 12  -  (2m-1) chi(O)  +  sum_Q l(Q, m)
//
// The formula is evaluated for every m >= 0. Its use for m in {0, 1} is an
// extension beyond the range where it is usually quoted; both endpoints
// reduce to +-chi(O) and serve as structural self-tests.

#include "pluri/basket.hpp"
#include "pluri/exactmath.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pluri {

struct CanonicalInvariants {
    Rat k3;      // K^3, positive for general type
    Int chi;     // chi(O_Y)
    Basket basket;
};

Rat chi_mK(const CanonicalInvariants& inv, const Int& m);

/// chi(mK), which equals h^0(mK) on a canonical model (K ample) for m >= 2
/// by vanishing of higher cohomology. Throws std::domain_error if m < 2 or
/// K^3 <= 0.
Rat h0_ample(const CanonicalInvariants& inv, const Int& m);

/// Every m in [0, m_max] where chi(mK) is not an integer.
std::vector<Int> integrality_check(const CanonicalInvariants& inv, const Int& m_max);

using PlurigenusTable = std::vector<std::pair<Int, Rat>>;

/// Rows (m, chi(mK)) for m = 0..m_max.
PlurigenusTable plurigenus_table(const CanonicalInvariants& inv, const Int& m_max);

/// "m\tvalue" header followed by one row per m.
std::string table_to_tsv(const PlurigenusTable& table);
/// {"table":[{"m":"0","value":"1"},...]}
std::string table_to_json(const PlurigenusTable& table);

// Coefficients of the affine form in (K^3, chi); used to invert the formula.
Rat k3_coefficient(const Int& m);    // (2m-1) m (m-1) / 12
Int chi_coefficient(const Int& m);   // -(2m-1)

}  // namespace pluri
