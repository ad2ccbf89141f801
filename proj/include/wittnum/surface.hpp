#pragma once

#include "wittnum/rational.hpp"
#include "wittnum/slopes.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittnum {

enum class Kodaira {
  MinusInfinity,
  Zero,
  One,
  Two,
};

std::string kodaira_string(Kodaira k);

struct SurfaceFlags {
  bool minimal = false;
  bool hodge_witt = false;
  bool ordinary = false;
  bool mazur_ogus = false;
  bool pic_reduced = false;
  bool h2cris_torsion_free = false;
  bool supersingular = false;
  bool quasi_elliptic = false;
};

// Numerical invariants of a smooth projective surface in characteristic p,
// plus hypothesis flags. c2 is the etale Euler characteristic, c1sq the
// canonical self-intersection.
struct SurfaceInvariants {
  Int p = 2;
  Int c1sq = 0;
  Int c2 = 0;
  Int b1 = 0;
  Int b2 = 0;
  Int q = 0;
  Int h01 = 0;
  Int pg = 0;
  std::optional<Int> h11;
  Int chi = 1;
  Kodaira kodaira = Kodaira::MinusInfinity;
  SurfaceFlags flags;
  std::optional<SlopeProfile> h2_slopes;
};

// Noether consistency, Betti/irregularity relations, flag implications.
// Collects human-readable violations; never throws.
std::vector<std::string> validate_surface(const SurfaceInvariants& s);

struct SurfaceReport {
  Int hW01 = 0;
  Int hW02 = 0;
  Int hW11 = 0;
  std::optional<Int> m11;
  std::optional<Int> T02;
  std::map<std::string, bool> predicates;
  std::vector<std::string> diagnostics;
};

// hW^{0,1} = b1/2, hW^{0,2} = chi - 1 + b1/2, and hW^{1,1} by both routes
// (b1 + (5 c2 - c1sq)/6 and 10 chi - c1sq + b1, which must agree). With slope
// data, also m^{1,1} and T^{0,2} = (m^{1,1} - hW^{1,1})/2.
SurfaceReport hw_numbers_surface(const SurfaceInvariants& s);

// The paired inequality predicates. Equivalences are asserted:
// c1sq <= 5 c2 holds exactly when hW^{1,1} >= b1 (and, with slope data,
// exactly when 2 T^{0,2} + b1 <= m^{1,1}); c1sq <= 5 c2 + 6 b1 holds exactly
// when hW^{1,1} >= 0.
std::map<std::string, bool> chern_predicates(const SurfaceInvariants& s);

// Blowup at k points: c1sq -= k, c2 += k, b2 += k, h11 += k; the birational
// invariants and T^{0,2} are untouched. Slope data gains k slope-one classes.
SurfaceInvariants blowup_transform(const SurfaceInvariants& s, const Int& k);

// What hW^{1,1} < 0 forces: general type when p >= 5, general type or
// quasi-elliptic of Kodaira dimension one when p = 2, 3. Also notes the
// forced infinite torsion T^{0,2} >= 1 and reports a contradiction when the
// Kodaira label is incompatible.
std::string diagnose_negativity(const SurfaceInvariants& s);

// Lower bounds on hW^{1,1} for a general-type surface: hW^{1,1} >= -c1sq
// (outside a p <= 7 fibration exception), hW^{1,1} > -c1sq/6 when c2 > 0,
// and hW^{1,1} <= h^{1,1} when h11 is known.
std::map<std::string, std::string> raynaud_bounds(const SurfaceInvariants& s);

// Hypothesis sets each sufficient for c1sq <= 5 c2 on a minimal general-type
// surface with slope data. A satisfied set whose conclusion fails on the
// record throws std::domain_error (inconsistent invariants).
std::map<std::string, std::string> sufficient_conditions_c1sq_le_5c2(
    const SurfaceInvariants& s);

enum class SupersingularOutcome {
  IneqHolds,
  NonliftableRegime,
};

struct SupersingularReport {
  SupersingularOutcome outcome;
  std::string note;
};

// For a minimal general-type Mazur-Ogus supersingular surface with pg > 0 and
// c2 > 0: either c1sq <= 5 c2, or c2 < 2 chi and no smooth deformation of the
// surface admits a flat lifting to characteristic zero.
SupersingularReport supersingular_dichotomy(const SurfaceInvariants& s);

struct OrdinaryConjectureReport {
  std::string assumption_note;
  std::map<std::string, bool> checks;
};

// Conditional bounds for ordinary minimal general-type surfaces: c1sq <= 5 c2 + 6,
// and c1sq < 6 c2 once c2 >= 6. Both assume an unproven cup-product
// injectivity conjecture; the report says so explicitly.
OrdinaryConjectureReport ordinary_conjecture_consequences(const SurfaceInvariants& s);

// One member of an iterated-Frobenius family over a product of curves:
// c2 = 4(g-1)(q-1) fixed, c1sq = p^n d + 8(g-1)(q-1) growing with n.
struct SzpiroParams {
  Int g = 2;
  Int q = 2;
  Int d = 1;
  Int p = 5;
  Int b1 = 0;
};

struct SzpiroMember {
  int n = 0;
  Int c1sq;
  Int c2;
  Int b1;
  Int hW11;
};

SzpiroMember szpiro_member(const SzpiroParams& params, int n);

// Least n >= 0 with c1sq > p^m c2.
int szpiro_least_n_exceeding(const SzpiroParams& params, int m);

}  // namespace wittnum
