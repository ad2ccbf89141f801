#include "wittnum/threefold.hpp"

#include <stdexcept>

namespace wittnum {

namespace {

void require_calabi_yau(const ThreefoldInvariants& t, const char* op) {
  if (!t.is_calabi_yau) {
    throw std::invalid_argument(std::string(op) + ": record is not Calabi-Yau");
  }
  if (t.c1c2 != 0) {
    throw std::invalid_argument(std::string(op) + ": Calabi-Yau record must have c1 c2 = 0");
  }
  if (t.hodge.has_value()) {
    const IntMatrix& h = *t.hodge;
    if (!is_square(h, 4) || h[0][0] != 1 || h[0][1] != 0 || h[0][2] != 0 || h[0][3] != 1) {
      throw std::invalid_argument(std::string(op) +
                                  ": Calabi-Yau Hodge row 0 must be (1, 0, 0, 1)");
    }
  }
}

}  // namespace

std::string check_status_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds:
      return "holds";
    case CheckStatus::Fails:
      return "fails";
    default:
      return "not-checkable";
  }
}

Int resolved_c3(const ThreefoldInvariants& t) {
  if (t.c3.has_value()) {
    return *t.c3;
  }
  if (t.b3.has_value()) {
    return 2 + 2 * t.b2 - *t.b3;
  }
  throw std::invalid_argument("threefold record has neither c3 nor b3");
}

Int resolved_b3(const ThreefoldInvariants& t) {
  if (t.b3.has_value()) {
    return *t.b3;
  }
  if (t.c3.has_value()) {
    const Int b3 = 2 + 2 * t.b2 - *t.c3;
    if (b3 < 0) {
      throw std::domain_error("derived b3 = 2 + 2 b2 - c3 = " + b3.str() + " is negative");
    }
    return b3;
  }
  throw std::invalid_argument("threefold record has neither c3 nor b3");
}

Int chi_omega1(const ThreefoldInvariants& t) {
  const Int c3 = resolved_c3(t);
  const Rat value = make_rat(-23 * t.c1c2, 24) - make_rat(c3, 2);
  if (!rat_is_integer(value)) {
    throw std::domain_error("chi_omega1: -(23/24) c1c2 - c3/2 = " + rat_string(value) +
                            " is not an integer; inconsistent Chern numbers");
  }
  return numerator(value);
}

HodgeWittTable cy_formulaire(const ThreefoldInvariants& t) {
  require_calabi_yau(t, "cy_formulaire");
  const Int c3 = resolved_c3(t);
  if (c3 % 2 != 0) {
    throw std::domain_error("cy_formulaire: c3 = " + c3.str() +
                            " is odd, so hW^{1,2} = b2 - c3/2 is not an integer");
  }
  const Int hw12 = t.b2 - c3 / 2;
  HodgeWittTable table;
  table.dim = 3;
  table.hW = zero_matrix(4, 4);
  table.hW[0][0] = table.hW[0][3] = table.hW[3][0] = table.hW[3][3] = 1;
  table.hW[1][1] = table.hW[2][2] = t.b2;
  table.hW[1][2] = table.hW[2][1] = hw12;
  table.chi = std::vector<Int>{Int(0), -c3 / 2, c3 / 2, Int(0)};
  if (t.hodge.has_value()) {
    table.hodge = t.hodge;
  }
  return table;
}

NonliftableReport nonliftable_characterization(const ThreefoldInvariants& t) {
  require_calabi_yau(t, "nonliftable_characterization");
  if (t.c3.has_value() && t.b3.has_value()) {
    const Int expected = 2 + 2 * t.b2 - *t.b3;
    if (*t.c3 != expected) {
      throw std::domain_error("nonliftable_characterization: inconsistent triple: c3 = " +
                              t.c3->str() + " but 2 + 2 b2 - b3 = " + expected.str());
    }
  }
  const Int c3 = resolved_c3(t);
  const Int b3 = resolved_b3(t);
  if (c3 % 2 != 0) {
    throw std::domain_error("nonliftable_characterization: c3 = " + c3.str() + " is odd");
  }
  NonliftableReport report;
  report.hW12 = t.b2 - c3 / 2;
  const bool minus_one = report.hW12 == -1;
  const bool negative = report.hW12 < 0;
  const bool b3_zero = b3 == 0;
  report.hw12_is_minus_one = minus_one ? CheckStatus::Holds : CheckStatus::Fails;
  report.hw12_negative = negative ? CheckStatus::Holds : CheckStatus::Fails;
  report.b3_zero = b3_zero ? CheckStatus::Holds : CheckStatus::Fails;
  if (minus_one != negative || negative != b3_zero) {
    throw std::domain_error("nonliftable_characterization: the numeric conditions "
                            "disagree; inconsistent (b2, b3, c3) triple");
  }
  report.h3_torsion = CheckStatus::NotCheckable;
  report.not_hw_and_m12_zero = CheckStatus::NotCheckable;
  const std::string implied = b3_zero ? "holds" : "fails";
  report.notes.push_back("H^3 torsion requires cohomology data; implied by equivalence: " +
                         implied);
  report.notes.push_back("(not Hodge-Witt and m^{1,2} = 0) requires slope data; implied "
                         "by equivalence: " + implied);
  return report;
}

bool liftability_necessary(const ThreefoldInvariants& t) {
  require_calabi_yau(t, "liftability_necessary");
  return resolved_c3(t) <= 2 * t.b2;
}

std::pair<Int, Int> hw_threefold_parts(const IntMatrix& m, const Int& T03, const Int& T02) {
  if (!is_square(m, 4)) {
    throw std::invalid_argument("hw_threefold_parts: m must be 4 x 4");
  }
  if (T03 < 0 || T02 < 0) {
    throw std::invalid_argument("hw_threefold_parts: domino numbers must be non-negative");
  }
  const Int hw12 = m[1][2] - T03;
  const Int hw11 = m[1][1] - 2 * T02;
  // The same values through the defining formula, with the only threefold
  // dominoes T^{0,2}, T^{0,3} and their duals T^{1,3}, T^{1,2}.
  IntMatrix T = zero_matrix(4, 4);
  T[0][3] = T03;
  T[1][2] = T03;
  T[0][2] = T02;
  T[1][3] = T02;
  const IntMatrix hW = hodge_witt_from_parts(m, T);
  if (hW[1][2] != hw12 || hW[1][1] != hw11) {
    throw std::domain_error("hw_threefold_parts: disagreement with the defining formula");
  }
  return {hw12, hw11};
}

}  // namespace wittnum
