#pragma once

// Test-only random generators: reflection-symmetric isoclinic slope profiles,
// duality-consistent crystals, and Noether-consistent surface records with
// compatible degree-2 slope data.

#include "wittnum/rational.hpp"
#include "wittnum/slopes.hpp"
#include "wittnum/surface.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace wittnum::testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }

  bool chance(double prob) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < prob;
  }

 private:
  std::mt19937_64 engine_;
};

// Multiplicities symmetric under lambda -> degree - lambda, each a multiple
// of its slope denominator, so every slope number and V-quotient length is
// an integer by construction.
inline SlopeProfile random_symmetric_profile(Rng& rng, int degree) {
  std::map<Rat, Int> mults;
  const long sites = rng.pick(0, 3);
  for (long s = 0; s < sites; ++s) {
    const long den = rng.pick(1, 4);
    const long num_max = degree * den / 2;
    if (num_max < 0) {
      continue;
    }
    const Rat lambda = make_rat(rng.pick(0, num_max), den);
    if (2 * lambda > degree) {
      continue;
    }
    const Int mult = denominator(lambda) * rng.pick(1, 3);
    mults[lambda] += mult;
    const Rat mirror = Rat(degree) - lambda;
    if (mirror != lambda) {
      mults[mirror] += mult;
    }
  }
  SlopeProfile p;
  p.degree = degree;
  for (const auto& [lambda, mult] : mults) {
    p.entries.push_back({lambda, mult});
  }
  return p;
}

inline CrystalProfile random_crystal(Rng& rng, int n) {
  CrystalProfile c;
  c.dim = n;
  c.profiles.resize(2 * n + 1);
  c.profiles[0] = SlopeProfile{0, {{Rat(0), Int(1)}}};
  c.profiles[2 * n] = SlopeProfile{2 * n, {{Rat(n), Int(1)}}};
  for (int k = 1; k <= n; ++k) {
    c.profiles[k] = random_symmetric_profile(rng, k);
    if (k < n) {
      c.profiles[2 * n - k] = poincare_dual(c.profiles[k], n);
    }
  }
  return c;
}

// A record satisfying Noether's formula, the Betti relation c2 = 2 - 2b1 + b2
// and chi = 1 - h01 + pg, with hW^{1,1} <= b2 so that slope data can exist.
inline SurfaceInvariants random_consistent_surface(Rng& rng) {
  static const long primes[] = {2, 3, 5, 7, 11};
  for (;;) {
    SurfaceInvariants s;
    s.p = primes[rng.pick(0, 4)];
    s.q = rng.pick(0, 3);
    s.pg = rng.pick(0, 6);
    const long delta = rng.chance(0.2) ? rng.pick(0, static_cast<long>(s.pg.convert_to<long long>())) : 0;
    s.h01 = s.q + delta;
    s.b1 = 2 * s.q;
    s.chi = 1 - s.h01 + s.pg;
    s.c1sq = rng.pick(-30, 150);
    s.c2 = 12 * s.chi - s.c1sq;
    s.b2 = s.c2 - 2 + 2 * s.b1;
    if (s.b2 < 1) {
      continue;
    }
    const Int hW11 = 10 * s.chi - s.c1sq + s.b1;
    if (hW11 > s.b2) {
      continue;
    }
    switch (rng.pick(0, 3)) {
      case 0:
        s.kodaira = Kodaira::MinusInfinity;
        break;
      case 1:
        s.kodaira = Kodaira::Zero;
        break;
      case 2:
        s.kodaira = Kodaira::One;
        break;
      default:
        s.kodaira = Kodaira::Two;
        break;
    }
    s.flags.minimal = rng.chance(0.5);
    s.flags.hodge_witt = rng.chance(0.5);
    s.flags.ordinary = s.flags.hodge_witt && rng.chance(0.5);
    s.flags.pic_reduced = delta == 0 && rng.chance(0.5);
    s.flags.h2cris_torsion_free = rng.chance(0.5);
    s.flags.mazur_ogus =
        s.flags.pic_reduced && s.flags.h2cris_torsion_free && rng.chance(0.5);
    return s;
  }
}

// Attaches a self-dual degree-2 profile with multiplicity total b2 and
// m^{1,1} = hW^{1,1} + 2t for a random admissible t, out of blocks at slopes
// {0, 2}, {1/2, 3/2} and 1. Requires hW^{1,1} <= b2 and matching parity,
// both guaranteed by random_consistent_surface.
inline void attach_compatible_slopes(Rng& rng, SurfaceInvariants& s) {
  const Int hW11 = 10 * s.chi - s.c1sq + s.b1;
  const Int span = s.b2 - hW11;
  if (span < 0 || span % 2 != 0) {
    throw std::logic_error("attach_compatible_slopes: record cannot carry slope data");
  }
  const long t_max = span.convert_to<long>() / 2;
  long t_min = 0;
  if (hW11 < 0) {
    t_min = ((-hW11 + 1) / 2).convert_to<long>();
  }
  const long t = rng.pick(t_min, t_max);
  const Int m11 = hW11 + 2 * t;
  const long v_max =
      std::min((m11 / 2).convert_to<long>(), ((s.b2 - m11) / 2).convert_to<long>());
  const long v = rng.pick(0, v_max);
  const Int m1 = m11 - 2 * v;
  const Int s0 = (s.b2 - m11 - 2 * v) / 2;
  SlopeProfile prof;
  prof.degree = 2;
  if (s0 > 0) {
    prof.entries.push_back({Rat(0), s0});
  }
  if (v > 0) {
    prof.entries.push_back({make_rat(1, 2), Int(2 * v)});
  }
  if (m1 > 0) {
    prof.entries.push_back({Rat(1), m1});
  }
  if (v > 0) {
    prof.entries.push_back({make_rat(3, 2), Int(2 * v)});
  }
  if (s0 > 0) {
    prof.entries.push_back({Rat(2), s0});
  }
  s.h2_slopes = prof;
}

}  // namespace wittnum::testgen
