#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "wittnum/surface.hpp"

using namespace wittnum;

namespace {

SurfaceInvariants projective_plane() {
  SurfaceInvariants s;
  s.p = 5;
  s.c1sq = 9;
  s.c2 = 3;
  s.b1 = 0;
  s.b2 = 1;
  s.q = 0;
  s.h01 = 0;
  s.pg = 0;
  s.h11 = 1;
  s.chi = 1;
  s.kodaira = Kodaira::MinusInfinity;
  s.flags.minimal = true;
  s.flags.ordinary = true;
  s.flags.hodge_witt = true;
  s.flags.pic_reduced = true;
  s.flags.h2cris_torsion_free = true;
  s.flags.mazur_ogus = true;
  return s;
}

SurfaceInvariants k3(bool supersingular) {
  SurfaceInvariants s;
  s.p = 3;
  s.c1sq = 0;
  s.c2 = 24;
  s.b1 = 0;
  s.b2 = 22;
  s.q = 0;
  s.h01 = 0;
  s.pg = 1;
  s.h11 = 20;
  s.chi = 2;
  s.kodaira = Kodaira::Zero;
  s.flags.minimal = true;
  s.flags.mazur_ogus = true;
  s.flags.pic_reduced = true;
  s.flags.h2cris_torsion_free = true;
  if (supersingular) {
    s.flags.supersingular = true;
    s.h2_slopes = SlopeProfile{2, {{Rat(1), Int(22)}}};
  } else {
    s.flags.hodge_witt = true;
    s.h2_slopes = SlopeProfile{
        2, {{make_rat(1, 2), Int(2)}, {Rat(1), Int(18)}, {make_rat(3, 2), Int(2)}}};
  }
  return s;
}

// Smooth quintic in P^3: c1sq = d(d-4)^2, c2 = d(d^2-4d+6), pg = 4, h11 = 45.
SurfaceInvariants quintic_surface(bool pure_slope_one) {
  SurfaceInvariants s;
  s.p = 5;
  s.c1sq = 5;
  s.c2 = 55;
  s.b1 = 0;
  s.b2 = 53;
  s.q = 0;
  s.h01 = 0;
  s.pg = 4;
  s.h11 = 45;
  s.chi = 5;
  s.kodaira = Kodaira::Two;
  s.flags.minimal = true;
  s.flags.mazur_ogus = true;
  s.flags.pic_reduced = true;
  s.flags.h2cris_torsion_free = true;
  if (pure_slope_one) {
    s.flags.supersingular = true;
    s.h2_slopes = SlopeProfile{2, {{Rat(1), Int(53)}}};
  } else {
    s.h2_slopes =
        SlopeProfile{2, {{Rat(0), Int(4)}, {Rat(1), Int(45)}, {Rat(2), Int(4)}}};
    s.flags.ordinary = true;
    s.flags.hodge_witt = true;
  }
  return s;
}

// Deep member of the iterated-Frobenius family shape: c1sq far above 5 c2.
SurfaceInvariants deep_general_type() {
  SurfaceInvariants s;
  s.p = 5;
  s.c1sq = 158;
  s.c2 = 10;
  s.chi = 14;
  s.q = 2;
  s.h01 = 2;
  s.pg = 15;
  s.b1 = 4;
  s.b2 = 16;
  s.kodaira = Kodaira::Two;
  s.flags.minimal = true;
  return s;
}

// Product of an ordinary genus-2 curve with a genus-2 curve whose Jacobian is
// supersingular: c1sq = 8, c2 = 4, pg = g g' = 4, b2 = 2 + b1(C) b1(C') = 18,
// H^2 slopes {1/2 (8), 1 (2), 3/2 (8)} by the Kunneth formula.
SurfaceInvariants curve_product() {
  SurfaceInvariants s;
  s.p = 5;
  s.c1sq = 8;
  s.c2 = 4;
  s.chi = 1;
  s.q = 4;
  s.h01 = 4;
  s.pg = 4;
  s.b1 = 8;
  s.b2 = 18;
  s.kodaira = Kodaira::Two;
  s.flags.minimal = true;
  s.flags.hodge_witt = true;
  s.flags.pic_reduced = true;
  s.h2_slopes = SlopeProfile{
      2, {{make_rat(1, 2), Int(8)}, {Rat(1), Int(2)}, {make_rat(3, 2), Int(8)}}};
  return s;
}

}  // namespace

TEST_CASE("validate_surface on classical records") {
  CHECK(validate_surface(projective_plane()).empty());
  CHECK(validate_surface(k3(false)).empty());
  CHECK(validate_surface(k3(true)).empty());
  CHECK(validate_surface(quintic_surface(true)).empty());
  CHECK(validate_surface(quintic_surface(false)).empty());
  CHECK(validate_surface(deep_general_type()).empty());
  CHECK(validate_surface(curve_product()).empty());

  SurfaceInvariants broken = projective_plane();
  broken.c2 = 4;
  bool noether_reported = false;
  for (const auto& v : validate_surface(broken)) {
    noether_reported = noether_reported || v.find("Noether fails") != std::string::npos;
  }
  CHECK(noether_reported);

  SurfaceInvariants odd_b1 = projective_plane();
  odd_b1.b1 = 1;
  CHECK(!validate_surface(odd_b1).empty());

  SurfaceInvariants qe = projective_plane();
  qe.flags.quasi_elliptic = true;
  CHECK(!validate_surface(qe).empty());  // p = 5
  qe.p = 3;
  CHECK(validate_surface(qe).empty());

  SurfaceInvariants wrong_betti = k3(true);
  wrong_betti.h2_slopes = SlopeProfile{2, {{Rat(1), Int(21)}}};
  CHECK(!validate_surface(wrong_betti).empty());
}

TEST_CASE("hw_numbers_surface formulaire values") {
  CHECK(hw_numbers_surface(projective_plane()).hW11 == 1);

  const SurfaceReport finite = hw_numbers_surface(k3(false));
  CHECK(finite.hW11 == 20);
  CHECK(finite.hW01 == 0);
  CHECK(finite.hW02 == 1);
  CHECK(finite.m11 == Int(20));
  CHECK(finite.T02 == Int(0));

  const SurfaceReport ss = hw_numbers_surface(k3(true));
  CHECK(ss.hW11 == 20);
  CHECK(ss.m11 == Int(22));
  CHECK(ss.T02 == Int(1));  // equals pg

  // A profile with m^{1,1} below hW^{1,1} cannot come from a surface.
  SurfaceInvariants bad = k3(true);
  bad.flags.supersingular = false;
  bad.h2_slopes = SlopeProfile{2, {{Rat(0), Int(11)}, {Rat(2), Int(11)}}};
  CHECK_THROWS_AS(hw_numbers_surface(bad), std::domain_error);
}

TEST_CASE("chern_predicates equivalences on fixtures") {
  const auto k3_preds = chern_predicates(k3(false));
  CHECK(k3_preds.at("c1sq_le_5c2"));
  CHECK(k3_preds.at("c1sq_le_5c2_plus_6b1"));
  CHECK(k3_preds.at("hw11_ge_b1"));
  CHECK(k3_preds.at("hw11_ge_0"));
  CHECK(k3_preds.at("two_T02_plus_b1_le_m11"));

  const auto deep = chern_predicates(deep_general_type());
  CHECK(!deep.at("c1sq_le_5c2"));
  CHECK(!deep.at("c1sq_le_5c2_plus_6b1"));
  CHECK(!deep.at("hw11_ge_b1"));
  CHECK(!deep.at("hw11_ge_0"));

  // Irrational ruled surface with q = 2: the weak bound holds.
  SurfaceInvariants ruled;
  ruled.p = 5;
  ruled.c1sq = -8;
  ruled.c2 = -4;
  ruled.b1 = 4;
  ruled.b2 = 2;
  ruled.q = 2;
  ruled.h01 = 2;
  ruled.pg = 0;
  ruled.chi = -1;
  ruled.kodaira = Kodaira::MinusInfinity;
  ruled.flags.pic_reduced = true;
  REQUIRE(validate_surface(ruled).empty());
  CHECK(hw_numbers_surface(ruled).hW11 == 2);
  CHECK(chern_predicates(ruled).at("c1sq_le_5c2_plus_6b1"));
}

TEST_CASE("blowup_transform") {
  const SurfaceInvariants p2 = projective_plane();
  const SurfaceInvariants once = blowup_transform(p2, 1);
  CHECK(once.c1sq == 8);
  CHECK(once.c2 == 4);
  CHECK(once.b2 == 2);
  CHECK(once.h11 == Int(2));
  CHECK(!once.flags.minimal);
  CHECK(hw_numbers_surface(once).hW11 == 2);

  const SurfaceInvariants thrice = blowup_transform(k3(false), 3);
  CHECK(hw_numbers_surface(thrice).hW11 == 23);
  CHECK(validate_surface(thrice).empty());

  CHECK_THROWS_AS(blowup_transform(p2, 0), std::invalid_argument);
}

TEST_CASE("property: blowup keeps T02 and composes") {
  testgen::Rng rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    SurfaceInvariants s = testgen::random_consistent_surface(rng);
    if (rng.chance(0.6)) {
      testgen::attach_compatible_slopes(rng, s);
    }
    REQUIRE(validate_surface(s).empty());
    const long j = rng.pick(1, 3);
    const long k = rng.pick(1, 3);
    const SurfaceInvariants two_step = blowup_transform(blowup_transform(s, j), k);
    const SurfaceInvariants one_step = blowup_transform(s, j + k);
    CHECK(two_step.c1sq == one_step.c1sq);
    CHECK(two_step.b2 == one_step.b2);
    const SurfaceReport before = hw_numbers_surface(s);
    const SurfaceReport after = hw_numbers_surface(one_step);
    CHECK(after.hW11 == before.hW11 + j + k);
    CHECK(one_step.b1 == s.b1);
    if (s.h2_slopes.has_value()) {
      CHECK(after.T02 == before.T02);
      CHECK(*after.m11 == *before.m11 + j + k);
      CHECK(hw_numbers_surface(two_step).T02 == before.T02);
    }
  }
}

TEST_CASE("diagnose_negativity") {
  CHECK(diagnose_negativity(k3(false)) == "no constraint");

  const std::string diag = diagnose_negativity(deep_general_type());
  CHECK(diag.find("general type") != std::string::npos);
  CHECK(diag.find("T^{0,2} >= 1") != std::string::npos);
  CHECK(diag.find("CONTRADICTION") == std::string::npos);
  // b1 != 0: the informational Albanese note is attached.
  CHECK(diag.find("Albanese") != std::string::npos);

  SurfaceInvariants mislabelled = deep_general_type();
  mislabelled.kodaira = Kodaira::Zero;
  CHECK(diagnose_negativity(mislabelled).find("CONTRADICTION") != std::string::npos);

  SurfaceInvariants small_p = deep_general_type();
  small_p.p = 3;
  small_p.kodaira = Kodaira::One;
  small_p.flags.quasi_elliptic = true;
  const std::string diag3 = diagnose_negativity(small_p);
  CHECK(diag3.find("quasi-elliptic") != std::string::npos);
  CHECK(diag3.find("CONTRADICTION") == std::string::npos);

  SurfaceInvariants hw_conflict = deep_general_type();
  hw_conflict.flags.hodge_witt = true;
  CHECK(diagnose_negativity(hw_conflict).find("CONTRADICTION") != std::string::npos);
}

TEST_CASE("raynaud_bounds") {
  const auto bounds = raynaud_bounds(deep_general_type());
  // hW11 = 140 - 158 + 4 = -14: within both lower bounds.
  CHECK(bounds.at("hw11_ge_minus_c1sq") == "holds");
  CHECK(bounds.at("hw11_gt_minus_c1sq_over_6") == "holds");
  CHECK(bounds.at("hw11_le_h11") == "skipped: h11 unknown");

  CHECK_THROWS_AS(raynaud_bounds(k3(false)), std::invalid_argument);

  // A negative-chi record: hW11 = 14 < -c1sq = 20, the exceptional case.
  SurfaceInvariants extreme;
  extreme.p = 5;
  extreme.q = 2;
  extreme.h01 = 2;
  extreme.pg = 0;
  extreme.chi = -1;
  extreme.b1 = 4;
  extreme.c1sq = -20;
  extreme.c2 = 8;
  extreme.b2 = 14;
  extreme.kodaira = Kodaira::Two;
  REQUIRE(validate_surface(extreme).empty());
  const auto exceptional = raynaud_bounds(extreme);
  CHECK(exceptional.at("hw11_ge_minus_c1sq").find("fails") != std::string::npos);
  CHECK(exceptional.at("hw11_gt_minus_c1sq_over_6") == "holds");  // 84 + (-20) > 0

  SurfaceInvariants nonpositive_c2 = extreme;
  nonpositive_c2.c1sq = 4;
  nonpositive_c2.c2 = -16;
  nonpositive_c2.b2 = -16 - 2 + 8;  // -10 < 0: not a valid record; skip via c2 = 0
  nonpositive_c2.c1sq = -12;
  nonpositive_c2.c2 = 0;
  nonpositive_c2.b2 = 6;
  REQUIRE(validate_surface(nonpositive_c2).empty());
  CHECK(raynaud_bounds(nonpositive_c2).at("hw11_gt_minus_c1sq_over_6") ==
        "skipped: c2 <= 0");
}

TEST_CASE("sufficient_conditions_c1sq_le_5c2") {
  const auto quintic = sufficient_conditions_c1sq_le_5c2(quintic_surface(false));
  CHECK(quintic.at("hodge_witt_m11_ge_2pg").find("verified") != std::string::npos);
  CHECK(quintic.at("mazur_ogus_m11_ge_4pg").find("verified") != std::string::npos);
  // The ordinary quintic has slope-0 classes in H^2: the slope set fails.
  CHECK(quintic.at("hodge_witt_min_slope_half").find("not applicable") !=
        std::string::npos);

  // Product of curves with all H^2 slopes >= 1/2: m11 = 10, T02 = 0.
  const auto product = sufficient_conditions_c1sq_le_5c2(curve_product());
  CHECK(product.at("hodge_witt_min_slope_half").find("verified") != std::string::npos);
  CHECK(product.at("hodge_witt_m11_ge_2pg").find("verified") != std::string::npos);

  // A record meeting a hypothesis set while violating c1sq <= 5 c2 is
  // inconsistent: here c1sq = 22 > 10 = 5 c2 with m11 = 4 >= 2 pg = 4.
  SurfaceInvariants planted;
  planted.p = 5;
  planted.c1sq = 22;
  planted.c2 = 2;
  planted.chi = 2;
  planted.q = 1;
  planted.h01 = 1;
  planted.pg = 2;
  planted.b1 = 2;
  planted.b2 = 4;
  planted.kodaira = Kodaira::Two;
  planted.flags.minimal = true;
  planted.flags.hodge_witt = true;
  planted.h2_slopes = SlopeProfile{2, {{Rat(1), Int(4)}}};
  REQUIRE(validate_surface(planted).empty());
  CHECK_THROWS_AS(sufficient_conditions_c1sq_le_5c2(planted), std::domain_error);

  CHECK_THROWS_AS(sufficient_conditions_c1sq_le_5c2(k3(false)), std::invalid_argument);
}

TEST_CASE("supersingular_dichotomy") {
  const auto quintic = supersingular_dichotomy(quintic_surface(true));
  CHECK(quintic.outcome == SupersingularOutcome::IneqHolds);

  // b2 < b1 + 2 pg: the non-liftable regime, with c2 < 2 chi verified.
  SurfaceInvariants weird;
  weird.p = 5;
  weird.q = 0;
  weird.h01 = 0;
  weird.pg = 5;
  weird.chi = 6;
  weird.b1 = 0;
  weird.c2 = 4;
  weird.c1sq = 68;
  weird.b2 = 2;
  weird.kodaira = Kodaira::Two;
  weird.flags.minimal = true;
  weird.flags.mazur_ogus = true;
  weird.flags.pic_reduced = true;
  weird.flags.h2cris_torsion_free = true;
  weird.flags.supersingular = true;
  weird.h2_slopes = SlopeProfile{2, {{Rat(1), Int(2)}}};
  REQUIRE(validate_surface(weird).empty());
  const auto report = supersingular_dichotomy(weird);
  CHECK(report.outcome == SupersingularOutcome::NonliftableRegime);
  CHECK(weird.c2 < 2 * weird.chi);

  SurfaceInvariants not_ss = quintic_surface(false);
  CHECK_THROWS_AS(supersingular_dichotomy(not_ss), std::invalid_argument);
}

TEST_CASE("ordinary_conjecture_consequences") {
  SurfaceInvariants s;
  s.p = 5;
  s.c1sq = 40;
  s.c2 = 8;
  s.chi = 4;
  s.q = 0;
  s.h01 = 0;
  s.pg = 3;
  s.b1 = 0;
  s.b2 = 6;
  s.kodaira = Kodaira::Two;
  s.flags.minimal = true;
  s.flags.ordinary = true;
  s.flags.hodge_witt = true;
  REQUIRE(validate_surface(s).empty());
  const auto report = ordinary_conjecture_consequences(s);
  CHECK(report.assumption_note.find("conditional") != std::string::npos);
  CHECK(report.checks.at("c1sq_le_5c2_plus_6"));  // 40 <= 46
  CHECK(report.checks.at("c1sq_lt_6c2"));         // 40 < 48

  SurfaceInvariants tight = s;
  tight.c1sq = 43;
  tight.c2 = 5;
  tight.b2 = 3;
  REQUIRE(validate_surface(tight).empty());
  const auto tight_report = ordinary_conjecture_consequences(tight);
  CHECK(!tight_report.checks.at("c1sq_le_5c2_plus_6"));  // 43 > 31
  CHECK(tight_report.checks.find("c1sq_lt_6c2") == tight_report.checks.end());

  SurfaceInvariants not_ordinary = s;
  not_ordinary.flags.ordinary = false;
  CHECK_THROWS_AS(ordinary_conjecture_consequences(not_ordinary), std::invalid_argument);
}

TEST_CASE("szpiro_member anchors and monotonicity") {
  const SzpiroParams params{2, 2, 6, 5, 4};
  const auto n1 = szpiro_member(params, 1);
  CHECK(n1.c2 == 4);
  CHECK(n1.c1sq == 38);
  CHECK(n1.hW11 == 1);
  const auto n2 = szpiro_member(params, 2);
  CHECK(n2.c1sq == 158);
  CHECK(n2.hW11 == -19);
  const auto n3 = szpiro_member(params, 3);
  CHECK(n3.c1sq == 758);
  CHECK(n3.hW11 == -119);

  Int prev = n1.hW11;
  for (int n = 2; n <= 10; ++n) {
    const Int cur = szpiro_member(params, n).hW11;
    CHECK(cur < prev);
    prev = cur;
  }

  CHECK(szpiro_least_n_exceeding(params, 1) == 1);
  CHECK(szpiro_least_n_exceeding(params, 2) == 2);  // 158 > 100

  // 5^n * 7 is never divisible by 6: the divisibility guard fires.
  const SzpiroParams bad{2, 2, 7, 5, 4};
  CHECK_THROWS_AS(szpiro_member(bad, 1), std::domain_error);
  CHECK_THROWS_AS(szpiro_member(SzpiroParams{1, 2, 6, 5, 4}, 1), std::invalid_argument);
  CHECK_THROWS_AS(szpiro_member(SzpiroParams{2, 2, 6, 4, 4}, 1), std::invalid_argument);
}

TEST_CASE("property: equivalences hold on random consistent records") {
  testgen::Rng rng(424242);
  for (int iter = 0; iter < 500; ++iter) {
    SurfaceInvariants s = testgen::random_consistent_surface(rng);
    REQUIRE(validate_surface(s).empty());
    const auto preds = chern_predicates(s);
    CHECK(preds.at("c1sq_le_5c2") == preds.at("hw11_ge_b1"));
    CHECK(preds.at("c1sq_le_5c2_plus_6b1") == preds.at("hw11_ge_0"));
    const SurfaceReport report = hw_numbers_surface(s);
    CHECK(report.hW02 == s.pg - (s.h01 - s.q));
    CHECK(report.hW02 >= 0);
  }
}
