#pragma once

#include "wittnum/matrix.hpp"
#include "wittnum/rational.hpp"
#include "wittnum/slopes.hpp"

#include <utility>

namespace wittnum {

// Full (n+1) x (n+1) Hodge matrix of a smooth degree-d hypersurface of
// dimension n in {2, 3, 4}, from polynomial closed forms. Off the middle
// row p + q = n the matrix is the Kronecker delta.
IntMatrix hodge_numbers_closed(int n, int d);

// The same matrix with the middle row read off the generating series
// (primitive coefficient plus the diagonal correction); any n >= 1.
IntMatrix hodge_numbers_series(int n, int d);

// Middle Betti number b_n from its closed form, asserted against the sum of
// the middle-row Hodge numbers. n in {2, 3, 4}.
Int betti_number(int n, int d);

// Domino numbers of the hypersurface under the extremal slope condition on
// its middle cohomology (pure slope 1 / no slopes below 1 / pure slope 2 for
// n = 2 / 3 / 4). When the condition is not met the same entries are only
// upper bounds, flagged by exact = false.
struct DominoBounds {
  bool exact = false;
  IntMatrix T;
};
DominoBounds maximal_domino_numbers(int n, int d, bool slope_condition_met);

// (h^{1,1} - 2 p_g, h^{1,1} - 4 p_g) for the degree-d surface in P^3:
// ((d^3 - 4d + 6)/3, 2d^2 - 5d + 4), asserted against direct differences.
// The second margin is positive for every d >= 5.
std::pair<Int, Int> general_type_margins(int d);

// Middle-cohomology slope profile: the extremal one under the maximal-domino
// condition, or the Hodge-polygon (ordinary) one.
SlopeProfile hypersurface_middle_profile(int n, int d, bool max_domino_slopes);

// Full slope data: {(0,1)} in degree 0, {(k,1)} in even degree 2k != n,
// empty odd degrees, and the chosen middle profile.
CrystalProfile hypersurface_crystal(int n, int d, bool max_domino_slopes);

}  // namespace wittnum
