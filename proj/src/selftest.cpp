#include "wittnum/selftest.hpp"

#include "wittnum/biseries.hpp"
#include "wittnum/hodge_witt.hpp"
#include "wittnum/hypersurface.hpp"
#include "wittnum/slopes.hpp"
#include "wittnum/surface.hpp"
#include "wittnum/threefold.hpp"

#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace wittnum {

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
  s.chi = 1;
  s.kodaira = Kodaira::MinusInfinity;
  s.flags.minimal = true;
  s.flags.ordinary = true;
  s.flags.hodge_witt = true;
  s.flags.pic_reduced = true;
  return s;
}

SurfaceInvariants ruled_genus2() {
  SurfaceInvariants s;
  s.p = 5;
  s.c1sq = -8;
  s.c2 = -4;
  s.b1 = 4;
  s.b2 = 2;
  s.q = 2;
  s.h01 = 2;
  s.pg = 0;
  s.chi = -1;
  s.kodaira = Kodaira::MinusInfinity;
  s.flags.minimal = true;
  s.flags.pic_reduced = true;
  return s;
}

SurfaceInvariants supersingular_k3() {
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
  s.flags.mazur_ogus = true;
  s.flags.pic_reduced = true;
  s.flags.h2cris_torsion_free = true;
  s.flags.supersingular = true;
  s.flags.minimal = true;
  s.h2_slopes = SlopeProfile{2, {{Rat(1), Int(22)}}};
  return s;
}

}  // namespace

int run_selftest(std::ostream& out) {
  struct Check {
    std::string name;
    std::function<bool()> body;
  };
  const std::vector<Check> checks = {
      {"k3-quartic-hodge-betti",
       [] {
         const IntMatrix h = hodge_numbers_series(2, 4);
         const BiSeries series = hodge_generating_series(4, 2);
         return h[0][2] == 1 && h[1][1] == 20 && betti_number(2, 4) == 22 &&
                series.coeff(1, 1) == Rat(19);
       }},
      {"quintic-threefold-hodge-betti",
       [] {
         const IntMatrix h = hodge_numbers_series(3, 5);
         return h[1][2] == 101 && h[0][3] == 1 && betti_number(3, 5) == 204;
       }},
      {"generating-series-two-routes-agree",
       [] {
         for (int d = 1; d <= 6; ++d) {
           if (!(hodge_generating_series(d, 5) == hodge_generating_series_ratio(d, 5))) {
             return false;
           }
         }
         return true;
       }},
      {"general-type-margins",
       [] {
         const auto [m2, m4] = general_type_margins(5);
         return m2 == 37 && m4 == 29;
       }},
      {"k3-slope-profiles",
       [] {
         const SlopeProfile finite_height{
             2, {{make_rat(1, 2), Int(2)}, {Rat(1), Int(18)}, {make_rat(3, 2), Int(2)}}};
         const SlopeProfile supersingular{2, {{Rat(1), Int(22)}}};
         return m11_from_h2(finite_height) == 20 && m11_from_h2(supersingular) == 22;
       }},
      {"surface-formulaire-classical",
       [] {
         const auto p2 = hw_numbers_surface(projective_plane());
         const auto ruled = hw_numbers_surface(ruled_genus2());
         const auto preds = chern_predicates(ruled_genus2());
         return p2.hW11 == 1 && ruled.hW11 == 2 && preds.at("c1sq_le_5c2_plus_6b1");
       }},
      {"supersingular-k3-dominoes",
       [] {
         const auto report = hw_numbers_surface(supersingular_k3());
         return report.hW11 == 20 && report.m11 == Int(22) && report.T02 == Int(1);
       }},
      {"szpiro-family-anchors",
       [] {
         SzpiroParams params{2, 2, 6, 5, 4};
         const auto m1 = szpiro_member(params, 1);
         const auto m2 = szpiro_member(params, 2);
         const auto m3 = szpiro_member(params, 3);
         bool ok = m1.c1sq == 38 && m1.hW11 == 1 && m2.c1sq == 158 && m2.hW11 == -19 &&
                   m3.c1sq == 758 && m3.hW11 == -119;
         Int prev = m1.hW11;
         for (int n = 2; n <= 10 && ok; ++n) {
           const Int cur = szpiro_member(params, n).hW11;
           ok = cur < prev;
           prev = cur;
         }
         return ok && szpiro_least_n_exceeding(params, 1) == 1 &&
                szpiro_least_n_exceeding(params, 2) == 2;
       }},
      {"calabi-yau-quintic",
       [] {
         ThreefoldInvariants quintic;
         quintic.is_calabi_yau = true;
         quintic.b2 = 1;
         quintic.c3 = -200;
         quintic.b3 = 204;
         const HodgeWittTable table = cy_formulaire(quintic);
         return table.hW[1][2] == 101 && chi_omega1(quintic) == 100 &&
                check_crew_formula(table) &&
                check_hw_symmetries(table, std::vector<Int>{1, 0, 1, 204, 1, 0, 1});
       }},
      {"nonliftable-threefold-numbers",
       [] {
         ThreefoldInvariants t;
         t.is_calabi_yau = true;
         t.b2 = 23;
         t.c3 = 48;
         t.b3 = 0;
         const auto report = nonliftable_characterization(t);
         return report.hW12 == -1 && report.b3_zero == CheckStatus::Holds &&
                !liftability_necessary(t) && chi_omega1(t) == -24;
       }},
      {"domino-recursion-hypersurfaces",
       [] {
         for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {4, 6}}) {
           const IntMatrix hodge = hodge_numbers_closed(n, d);
           const IntMatrix m = slope_numbers(hypersurface_crystal(n, d, true));
           const IntMatrix T = mazur_ogus_dominoes(hodge, m, n);
           if (T != maximal_domino_numbers(n, d, true).T || !check_domino_duality(T, n)) {
             return false;
           }
         }
         return maximal_domino_numbers(4, 6, true).T[1][3] == 428;
       }},
      {"blowup-invariance",
       [] {
         const SurfaceInvariants k3 = supersingular_k3();
         const SurfaceInvariants blown = blowup_transform(k3, 3);
         const auto before = hw_numbers_surface(k3);
         const auto after = hw_numbers_surface(blown);
         return after.hW11 == before.hW11 + 3 && after.T02 == before.T02 &&
                blown.b1 == k3.b1;
       }},
  };

  int failures = 0;
  for (const auto& check : checks) {
    bool ok = false;
    std::string detail;
    try {
      ok = check.body();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    out << (ok ? "PASS" : "FAIL") << "  " << check.name;
    if (!detail.empty()) {
      out << "  (" << detail << ")";
    }
    out << "\n";
    if (!ok) {
      ++failures;
    }
  }
  out << (failures == 0 ? "selftest: all checks passed"
                        : "selftest: " + std::to_string(failures) + " check(s) failed")
      << "\n";
  return failures;
}

}  // namespace wittnum
