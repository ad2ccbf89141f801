#pragma once

#include "wittnum/hodge_witt.hpp"
#include "wittnum/matrix.hpp"
#include "wittnum/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wittnum {

// Chern and Betti data of a smooth projective threefold. For Calabi-Yau
// records c1 c2 = 0 and c3, b3 are linked by c3 = 2 + 2 b2 - b3 (b1 = b5 = 0);
// either may be omitted and is then derived from the other.
struct ThreefoldInvariants {
  Int c1c2 = 0;
  std::optional<Int> c3;
  Int b2 = 0;
  std::optional<Int> b3;
  std::optional<IntMatrix> hodge;
  bool is_calabi_yau = false;
  std::optional<bool> hodge_witt;
  std::optional<bool> h2cris_torsion_free;
  std::optional<bool> h0_omega1_zero;
};

// Riemann-Roch for the cotangent sheaf: chi(Omega^1) = -(23/24) c1 c2 - c3/2,
// asserted integral.
Int chi_omega1(const ThreefoldInvariants& t);

// The Calabi-Yau Hodge-Witt table: row 0 is (1, 0, 0, 1), hW^{1,1} = b2,
// hW^{1,2} = b2 - c3/2, hW^{1,3} = 0; the rest by transpose symmetry and
// hW^{i,j} = hW^{3-i,3-j}. chi(Omega^i) is filled in alongside.
HodgeWittTable cy_formulaire(const ThreefoldInvariants& t);

enum class CheckStatus {
  Holds,
  Fails,
  NotCheckable,
};

std::string check_status_string(CheckStatus s);

// The equivalent ways a Calabi-Yau threefold can have a negative Hodge-Witt
// number. Conditions on torsion of H^3 and on (non-Hodge-Witt, m^{1,2} = 0)
// need data beyond Betti/Chern numbers and are reported as implications.
struct NonliftableReport {
  Int hW12;
  CheckStatus hw12_is_minus_one;
  CheckStatus hw12_negative;
  CheckStatus h3_torsion;
  CheckStatus b3_zero;
  CheckStatus not_hw_and_m12_zero;
  std::vector<std::string> notes;
};

NonliftableReport nonliftable_characterization(const ThreefoldInvariants& t);

// Necessary condition for a lifting to characteristic zero: c3 <= 2 b2.
// false certifies non-liftability.
bool liftability_necessary(const ThreefoldInvariants& t);

// (hW^{1,2}, hW^{1,1}) = (m^{1,2} - T^{0,3}, m^{1,1} - 2 T^{0,2}), the only
// threefold Hodge-Witt numbers that can go negative. Cross-checked against
// the defining formula under the threefold domino vanishing pattern.
std::pair<Int, Int> hw_threefold_parts(const IntMatrix& m, const Int& T03, const Int& T02);

// Derived quantities with the b1 = b5 = 0 convention.
Int resolved_c3(const ThreefoldInvariants& t);
Int resolved_b3(const ThreefoldInvariants& t);

}  // namespace wittnum
