#include "wittnum/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittnum {

namespace {

void ensure_valid(const SurfaceInvariants& s, const char* op) {
  const auto violations = validate_surface(s);
  if (!violations.empty()) {
    throw std::invalid_argument(std::string(op) + ": invalid surface record: " +
                                violations.front());
  }
}

Int hw11_of(const SurfaceInvariants& s) {
  // Both routes agree whenever Noether holds; hw_numbers_surface asserts it.
  return 10 * s.chi - s.c1sq + s.b1;
}

bool slope_condition_at_least_half(const SlopeProfile& p) {
  return p.entries.empty() || min_slope(p) >= make_rat(1, 2);
}

}  // namespace

std::string kodaira_string(Kodaira k) {
  switch (k) {
    case Kodaira::MinusInfinity:
      return "-inf";
    case Kodaira::Zero:
      return "0";
    case Kodaira::One:
      return "1";
    default:
      return "2";
  }
}

std::vector<std::string> validate_surface(const SurfaceInvariants& s) {
  std::vector<std::string> violations;
  if (!is_prime(s.p)) {
    violations.push_back("p = " + s.p.str() + " is not prime");
  }
  if (12 * s.chi != s.c1sq + s.c2) {
    violations.push_back("Noether fails: 12 chi = " + Int(12 * s.chi).str() +
                         " but c1sq + c2 = " + Int(s.c1sq + s.c2).str());
  }
  // Etale Euler characteristic against Betti numbers; combined with Noether
  // and chi = 1 - h01 + pg this is the second Noether form
  // 10 + 12 pg = c1sq + b2 + 8q + 12(h01 - q).
  if (s.c2 != 2 - 2 * s.b1 + s.b2) {
    violations.push_back("c2 = " + s.c2.str() + " differs from 2 - 2 b1 + b2 = " +
                         Int(2 - 2 * s.b1 + s.b2).str());
  }
  if (s.chi != 1 - s.h01 + s.pg) {
    violations.push_back("chi = " + s.chi.str() + " differs from 1 - h01 + pg = " +
                         Int(1 - s.h01 + s.pg).str());
  }
  if (s.b1 != 2 * s.q) {
    violations.push_back("b1 = " + s.b1.str() + " is not 2q = " + Int(2 * s.q).str());
  }
  if (s.h01 < s.q || s.h01 - s.q > s.pg) {
    violations.push_back("h01 - q = " + Int(s.h01 - s.q).str() + " outside [0, pg]");
  }
  if (s.b1 < 0 || s.b2 < 0 || s.q < 0 || s.h01 < 0 || s.pg < 0) {
    violations.push_back("negative Betti/Hodge invariant");
  }
  if ((5 * s.c2 - s.c1sq + 6 * s.b1) % 6 != 0) {
    violations.push_back("(5 c2 - c1sq + 6 b1)/6 is not an integer");
  }
  if (s.flags.ordinary && !s.flags.hodge_witt) {
    violations.push_back("ordinary surfaces are Hodge-Witt; flags disagree");
  }
  if (s.flags.mazur_ogus && !(s.flags.pic_reduced && s.flags.h2cris_torsion_free)) {
    violations.push_back("mazur_ogus requires pic_reduced and h2cris_torsion_free");
  }
  if (s.flags.pic_reduced && s.h01 != s.q) {
    violations.push_back("pic_reduced requires h01 == q");
  }
  if (s.flags.quasi_elliptic && s.p != 2 && s.p != 3) {
    violations.push_back("quasi_elliptic surfaces exist only in characteristic 2 and 3");
  }
  if (s.h2_slopes.has_value()) {
    const SlopeProfile& prof = *s.h2_slopes;
    if (prof.degree != 2) {
      violations.push_back("h2_slopes must have degree 2");
    }
    for (auto& v : validate_profile(prof)) {
      violations.push_back("h2_slopes: " + v);
    }
    if (prof.betti() != s.b2) {
      violations.push_back("h2_slopes multiplicity total " + prof.betti().str() +
                           " differs from b2 = " + s.b2.str());
    }
    if (!is_reflection_symmetric(prof)) {
      violations.push_back("h2_slopes is not self-dual under lambda -> 2 - lambda");
    }
    if (s.flags.supersingular && !is_pure_slope(prof, Rat(1))) {
      violations.push_back("supersingular flag set but H^2 is not pure slope one");
    }
  }
  return violations;
}

SurfaceReport hw_numbers_surface(const SurfaceInvariants& s) {
  ensure_valid(s, "hw_numbers_surface");
  SurfaceReport report;
  report.hW01 = rat_to_int(make_rat(s.b1, 2));
  report.hW02 = s.chi - 1 + report.hW01;
  const Rat ekedahl = Rat(s.b1) + make_rat(5 * s.c2 - s.c1sq, 6);
  const Int noether_route = hw11_of(s);
  if (!rat_is_integer(ekedahl) || numerator(ekedahl) != noether_route) {
    throw std::domain_error("hw_numbers_surface: the two hW^{1,1} formulas disagree");
  }
  report.hW11 = noether_route;
  if (s.h2_slopes.has_value()) {
    const Int m11 = m11_from_h2(*s.h2_slopes);
    const Int twice_t02 = m11 - report.hW11;
    if (twice_t02 < 0 || twice_t02 % 2 != 0) {
      throw std::domain_error("hw_numbers_surface: T^{0,2} = (m^{1,1} - hW^{1,1})/2 = (" +
                              m11.str() + " - " + report.hW11.str() +
                              ")/2 is not a non-negative integer");
    }
    report.m11 = m11;
    report.T02 = twice_t02 / 2;
  }
  return report;
}

std::map<std::string, bool> chern_predicates(const SurfaceInvariants& s) {
  ensure_valid(s, "chern_predicates");
  const Int hW11 = hw11_of(s);
  std::map<std::string, bool> out;
  const bool a1 = s.c1sq <= 5 * s.c2;
  const bool a2 = hW11 >= s.b1;
  const bool b1pred = s.c1sq <= 5 * s.c2 + 6 * s.b1;
  const bool b2pred = hW11 >= 0;
  out["c1sq_le_5c2"] = a1;
  out["hw11_ge_b1"] = a2;
  out["c1sq_le_5c2_plus_6b1"] = b1pred;
  out["hw11_ge_0"] = b2pred;
  if (a1 != a2 || b1pred != b2pred) {
    throw std::domain_error("chern_predicates: equivalence identity violated");
  }
  if (s.h2_slopes.has_value()) {
    const SurfaceReport report = hw_numbers_surface(s);
    const bool a3 = 2 * *report.T02 + s.b1 <= *report.m11;
    out["two_T02_plus_b1_le_m11"] = a3;
    if (a3 != a1) {
      throw std::domain_error("chern_predicates: slope-side equivalence violated");
    }
  }
  return out;
}

SurfaceInvariants blowup_transform(const SurfaceInvariants& s, const Int& k) {
  ensure_valid(s, "blowup_transform");
  if (k < 1) {
    throw std::invalid_argument("blowup_transform: k must be >= 1");
  }
  SurfaceInvariants out = s;
  out.c1sq -= k;
  out.c2 += k;
  out.b2 += k;
  if (out.h11.has_value()) {
    *out.h11 += k;
  }
  out.flags.minimal = false;
  if (out.h2_slopes.has_value()) {
    // Each exceptional divisor contributes one slope-one class to H^2.
    auto& entries = out.h2_slopes->entries;
    auto it = std::find_if(entries.begin(), entries.end(),
                           [](const SlopeEntry& e) { return e.lambda == 1; });
    if (it != entries.end()) {
      it->mult += k;
    } else {
      it = std::find_if(entries.begin(), entries.end(),
                        [](const SlopeEntry& e) { return e.lambda > 1; });
      entries.insert(it, SlopeEntry{Rat(1), k});
    }
  }
  return out;
}

std::string diagnose_negativity(const SurfaceInvariants& s) {
  ensure_valid(s, "diagnose_negativity");
  const Int hW11 = hw11_of(s);
  if (hW11 >= 0) {
    return "no constraint";
  }
  std::string out;
  if (s.p >= 5) {
    out = "general type (kappa=2) forced";
    if (s.kodaira != Kodaira::Two) {
      out += "; CONTRADICTION: record is labelled kappa=" + kodaira_string(s.kodaira);
    }
  } else {
    out = "general type or quasi-elliptic (kappa=1) forced";
    if (s.kodaira == Kodaira::MinusInfinity || s.kodaira == Kodaira::Zero) {
      out += "; CONTRADICTION: record is labelled kappa=" + kodaira_string(s.kodaira);
    }
  }
  out += "; not Hodge-Witt; T^{0,2} >= 1";
  if (s.flags.hodge_witt) {
    out += "; CONTRADICTION: hodge_witt flag is set";
  }
  if (s.b1 != 0) {
    // Informational only: not decidable from the numerics.
    out += "; conjecturally the Albanese image is a curve";
  }
  return out;
}

std::map<std::string, std::string> raynaud_bounds(const SurfaceInvariants& s) {
  ensure_valid(s, "raynaud_bounds");
  if (s.kodaira != Kodaira::Two) {
    throw std::invalid_argument("raynaud_bounds: record must be of general type");
  }
  const Int hW11 = hw11_of(s);
  std::map<std::string, std::string> out;
  if (hW11 >= -s.c1sq) {
    out["hw11_ge_minus_c1sq"] = "holds";
  } else {
    out["hw11_ge_minus_c1sq"] =
        "fails: requires p <= 7 and a fibration over a curve of genus >= 2 with "
        "singular rational generic fibre";
  }
  if (s.c2 > 0) {
    // hW^{1,1} > -c1sq/6 compared exactly: 6 hW^{1,1} + c1sq > 0.
    out["hw11_gt_minus_c1sq_over_6"] =
        (6 * hW11 + s.c1sq > 0) ? "holds" : "fails: inconsistent with c2 > 0";
  } else if (6 * hW11 + s.c1sq <= 0) {
    out["hw11_gt_minus_c1sq_over_6"] =
        "below the bound: a fibration over a curve of genus >= 1 is forced";
  } else {
    out["hw11_gt_minus_c1sq_over_6"] = "skipped: c2 <= 0";
  }
  if (s.h11.has_value()) {
    out["hw11_le_h11"] = (hW11 <= *s.h11) ? "holds" : "fails";
  } else {
    out["hw11_le_h11"] = "skipped: h11 unknown";
  }
  return out;
}

std::map<std::string, std::string> sufficient_conditions_c1sq_le_5c2(
    const SurfaceInvariants& s) {
  ensure_valid(s, "sufficient_conditions_c1sq_le_5c2");
  if (!s.h2_slopes.has_value()) {
    throw std::invalid_argument("sufficient_conditions_c1sq_le_5c2: slope data required");
  }
  if (s.kodaira != Kodaira::Two || !s.flags.minimal) {
    throw std::invalid_argument(
        "sufficient_conditions_c1sq_le_5c2: record must be minimal of general type");
  }
  const Int m11 = m11_from_h2(*s.h2_slopes);
  const bool conclusion = s.c1sq <= 5 * s.c2;
  std::map<std::string, std::string> out;
  const auto evaluate = [&](const std::string& key, bool hypotheses,
                            const std::string& unmet) {
    if (!hypotheses) {
      out[key] = "not applicable: " + unmet;
      return;
    }
    if (!conclusion) {
      throw std::domain_error("sufficient_conditions_c1sq_le_5c2: hypotheses of '" + key +
                              "' hold but c1sq <= 5 c2 fails; inconsistent invariants");
    }
    out[key] = "satisfied; c1sq <= 5 c2 verified";
  };
  evaluate("hodge_witt_m11_ge_2pg",
           s.flags.hodge_witt && s.c2 > 0 && m11 >= 2 * s.pg,
           "needs hodge_witt, c2 > 0, m11 >= 2 pg");
  evaluate("mazur_ogus_m11_ge_4pg",
           s.flags.mazur_ogus && s.c2 > 0 && m11 >= 4 * s.pg,
           "needs mazur_ogus, c2 > 0, m11 >= 4 pg");
  evaluate("hodge_witt_min_slope_half",
           s.c2 > 0 && s.pg > 0 && s.flags.hodge_witt &&
               (s.flags.pic_reduced || s.flags.h2cris_torsion_free) &&
               slope_condition_at_least_half(*s.h2_slopes),
           "needs c2 > 0, pg > 0, hodge_witt, pic_reduced or h2cris_torsion_free, "
           "and no H^2 slope below 1/2");
  return out;
}

SupersingularReport supersingular_dichotomy(const SurfaceInvariants& s) {
  ensure_valid(s, "supersingular_dichotomy");
  if (!s.flags.supersingular || !s.flags.mazur_ogus || !s.flags.minimal ||
      s.kodaira != Kodaira::Two || s.pg <= 0 || s.c2 <= 0) {
    throw std::invalid_argument(
        "supersingular_dichotomy: requires a minimal general-type Mazur-Ogus "
        "supersingular record with pg > 0 and c2 > 0");
  }
  if (s.c1sq <= 5 * s.c2) {
    return {SupersingularOutcome::IneqHolds, "c1sq <= 5 c2"};
  }
  if (s.c2 < 2 * s.chi) {
    return {SupersingularOutcome::NonliftableRegime,
            "c2 < 2 chi: no smooth deformation of the surface admits a flat lifting "
            "to characteristic zero"};
  }
  throw std::domain_error("supersingular_dichotomy: both branches fail; record is "
                          "inconsistent");
}

OrdinaryConjectureReport ordinary_conjecture_consequences(const SurfaceInvariants& s) {
  ensure_valid(s, "ordinary_conjecture_consequences");
  if (!s.flags.ordinary || !s.flags.minimal || s.kodaira != Kodaira::Two) {
    throw std::invalid_argument(
        "ordinary_conjecture_consequences: requires an ordinary minimal general-type "
        "record");
  }
  OrdinaryConjectureReport report;
  report.assumption_note =
      "conditional: both bounds assume an unproven cup-product injectivity conjecture "
      "for ordinary surfaces";
  report.checks["c1sq_le_5c2_plus_6"] = s.c1sq <= 5 * s.c2 + 6;
  if (s.c2 >= 6) {
    report.checks["c1sq_lt_6c2"] = s.c1sq < 6 * s.c2;
  }
  return report;
}

SzpiroMember szpiro_member(const SzpiroParams& params, int n) {
  if (params.g < 2 || params.q < 2) {
    throw std::invalid_argument("szpiro_member: fibre and base genus must be >= 2");
  }
  if (params.d < 1) {
    throw std::invalid_argument("szpiro_member: d must be >= 1");
  }
  if (!is_prime(params.p)) {
    throw std::invalid_argument("szpiro_member: p must be prime");
  }
  if (params.b1 < 0 || params.b1 % 2 != 0) {
    throw std::invalid_argument("szpiro_member: b1 must be even and non-negative");
  }
  if (n < 0) {
    throw std::invalid_argument("szpiro_member: n must be >= 0");
  }
  SzpiroMember member;
  member.n = n;
  const Int base = 4 * (params.g - 1) * (params.q - 1);
  member.c2 = base;
  member.c1sq = int_pow(params.p, static_cast<unsigned>(n)) * params.d + 2 * base;
  member.b1 = params.b1;
  const Rat hw11 = Rat(params.b1) + make_rat(5 * member.c2 - member.c1sq, 6);
  if (!rat_is_integer(hw11)) {
    throw std::domain_error("szpiro_member: hW^{1,1} is not an integer; needs "
                            "6 | p^n * d but p^n * d mod 6 = " +
                            Int(int_pow(params.p, static_cast<unsigned>(n)) * params.d % 6).str());
  }
  member.hW11 = numerator(hw11);
  return member;
}

int szpiro_least_n_exceeding(const SzpiroParams& params, int m) {
  if (m < 1) {
    throw std::invalid_argument("szpiro_least_n_exceeding: m must be >= 1");
  }
  const Int base = 4 * (params.g - 1) * (params.q - 1);
  const Int threshold = int_pow(params.p, static_cast<unsigned>(m)) * base;
  Int power = 1;
  for (int n = 0;; ++n) {
    if (power * params.d + 2 * base > threshold) {
      return n;
    }
    power *= params.p;
  }
}

}  // namespace wittnum
