#pragma once

#include "wittnum/matrix.hpp"
#include "wittnum/rational.hpp"

#include <optional>
#include <vector>

namespace wittnum {

// Slope, domino and Hodge-Witt numbers of one variety, with optional Hodge
// numbers and chi(Omega^i). Matrices are (dim+1) x (dim+1); indices outside
// that range read as zero in every formula.
struct HodgeWittTable {
  int dim = 0;
  std::optional<IntMatrix> m;
  std::optional<IntMatrix> T;
  IntMatrix hW;
  std::optional<IntMatrix> hodge;
  std::optional<std::vector<Int>> chi;
};

// hW^{i,j} = m^{i,j} + T^{i,j} - 2 T^{i-1,j+1} + T^{i-2,j+2}.
IntMatrix hodge_witt_from_parts(const IntMatrix& m, const IntMatrix& T);

// Domino numbers of a variety whose Hodge-Witt numbers equal its Hodge
// numbers: T^{0,j} = h^{0,j} - m^{0,j}, then downward induction on j with
// T^{i,j} = h^{i,j} - m^{i,j} + 2 T^{i-1,j+1} - T^{i-2,j+2}. A negative
// entry aborts with std::domain_error naming the first offending slot.
IntMatrix mazur_ogus_dominoes(const IntMatrix& hodge, const IntMatrix& m, int n);

// Alternating rows sums: sum_j (-1)^j hW^{i,j} = chi(Omega^i) = sum_j (-1)^j h^{i,j}.
bool check_crew_formula(const HodgeWittTable& t);

// hW <= hodge entrywise; equality when mazur_ogus is set.
bool check_ekedahl_bound(const HodgeWittTable& t, bool mazur_ogus);

// T^{i,j} == T^{n-i-2,n-j+2} whenever the partner indices are in range;
// slots whose partner falls outside must vanish.
bool check_domino_duality(const IntMatrix& T, int n);

// Transpose symmetry (dimension <= 3 only), duality hW^{i,j} = hW^{n-i,n-j},
// and Betti sums sum_{i+j=k} hW^{i,j} = b_k. Betti numbers come from t.m, or
// from betti_override when m is absent; the sum check is skipped when
// neither is available.
bool check_hw_symmetries(const HodgeWittTable& t,
                         const std::optional<std::vector<Int>>& betti_override = {});

}  // namespace wittnum
