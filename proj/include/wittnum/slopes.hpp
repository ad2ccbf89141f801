#pragma once

#include "wittnum/matrix.hpp"
#include "wittnum/rational.hpp"

#include <string>
#include <vector>

namespace wittnum {

// Newton-polygon data of Frobenius on one cohomology degree: the multiset of
// (slope, multiplicity) pairs, slopes strictly increasing.
struct SlopeEntry {
  Rat lambda;
  Int mult;
};

struct SlopeProfile {
  int degree = 0;
  std::vector<SlopeEntry> entries;

  Int betti() const;
};

enum class Strictness {
  Lenient,
  // Additionally requires each slope a/b (lowest terms) to have multiplicity
  // divisible by b, as genuine F-crystals do.
  Strict,
};

// Collects violations; never throws. Valid profiles have slopes in
// [0, degree], strictly increasing, with positive multiplicities.
std::vector<std::string> validate_profile(const SlopeProfile& p,
                                          Strictness strictness = Strictness::Lenient);

// Degree 2n - p.degree profile with entries (n - lambda, mult), re-sorted.
SlopeProfile poincare_dual(const SlopeProfile& p, int n);

// Whether multiplicities are symmetric under lambda -> degree - lambda.
bool is_reflection_symmetric(const SlopeProfile& p);

Rat min_slope(const SlopeProfile& p);
bool is_pure_slope(const SlopeProfile& p, const Rat& s);

// Slope data for all cohomology degrees 0..2n of an n-dimensional variety.
struct CrystalProfile {
  int dim = 1;
  std::vector<SlopeProfile> profiles;  // indexed by degree

  const SlopeProfile& at_degree(int k) const;
};

// Per-degree validity plus the global constraints: degree k and 2n - k are
// exchanged by lambda -> n - lambda, degree 0 is {(0,1)} and degree 2n is
// {(n,1)} (connectedness).
std::vector<std::string> validate_crystal(const CrystalProfile& c,
                                          Strictness strictness = Strictness::Lenient);

// Slope numbers m^{i,j}: over H^{i+j}, slopes in [i-1, i) weighted by
// lambda - i + 1 plus slopes in [i, i+1) weighted by i + 1 - lambda. Both
// windows are half-open; a slope exactly at i counts in the second with
// weight 1. Throws std::domain_error when some m^{i,j} is not an integer.
IntMatrix slope_numbers(const CrystalProfile& c);

// m^{i,j} == m^{j,i} (Hard Lefschetz) and m^{i,j} == m^{n-i,n-j} (duality).
bool check_slope_symmetries(const CrystalProfile& c);

// b_k as the multiplicity total of the degree-k profile; also asserts that
// sum_{i+j=k} m^{i,j} equals it, throwing std::domain_error otherwise.
Int betti_from_slopes(const CrystalProfile& c, int k);

// length(M/VM) = sum (1 - lambda) * mult for a profile with all slopes in
// [0, 1); the sum must come out a non-negative integer.
Int crew_vmod_length(const SlopeProfile& p);

// m^{1,1} of a self-dual degree-2 profile split as the slope-one multiplicity
// plus twice the slope-weighted count of slopes strictly inside (0, 1).
struct M11Parts {
  Int slope_one_mult;
  Rat twice_subunit_sum;
};
M11Parts m11_decomposition(const SlopeProfile& p);

// m^{1,1} straight from the tent weights of a degree-2 profile.
Int m11_from_h2(const SlopeProfile& p);

}  // namespace wittnum
