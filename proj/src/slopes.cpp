#include "wittnum/slopes.hpp"

#include <map>
#include <stdexcept>

namespace wittnum {

namespace {

std::string entry_string(const SlopeEntry& e) {
  return "(" + rat_string(e.lambda) + ", " + e.mult.str() + ")";
}

// Weight of the slope lambda in m^{i,*}: the tent over [i-1, i) and [i, i+1).
Rat tent_weight(const Rat& lambda, int i) {
  if (lambda >= i - 1 && lambda < i) {
    return lambda - (i - 1);
  }
  if (lambda >= i && lambda < i + 1) {
    return (i + 1) - lambda;
  }
  return Rat(0);
}

void require_valid_crystal(const CrystalProfile& c, const char* op) {
  const auto violations = validate_crystal(c);
  if (!violations.empty()) {
    throw std::invalid_argument(std::string(op) + ": invalid crystal profile: " +
                                violations.front());
  }
}

}  // namespace

Int SlopeProfile::betti() const {
  Int total = 0;
  for (const auto& e : entries) {
    total += e.mult;
  }
  return total;
}

std::vector<std::string> validate_profile(const SlopeProfile& p, Strictness strictness) {
  std::vector<std::string> violations;
  if (p.degree < 0) {
    violations.push_back("degree is negative");
    return violations;
  }
  const SlopeEntry* prev = nullptr;
  for (const auto& e : p.entries) {
    if (e.lambda < 0 || e.lambda > p.degree) {
      violations.push_back("slope out of range: " + entry_string(e) + " in degree " +
                           std::to_string(p.degree));
    }
    if (e.mult < 1) {
      violations.push_back("non-positive multiplicity: " + entry_string(e));
    }
    if (prev != nullptr && !(prev->lambda < e.lambda)) {
      violations.push_back("slopes not strictly increasing: " + entry_string(*prev) +
                           " then " + entry_string(e));
    }
    if (strictness == Strictness::Strict && e.mult % denominator(e.lambda) != 0) {
      violations.push_back("isoclinicity violated: multiplicity of " + entry_string(e) +
                           " is not divisible by the slope denominator");
    }
    prev = &e;
  }
  return violations;
}

SlopeProfile poincare_dual(const SlopeProfile& p, int n) {
  if (p.degree > 2 * n) {
    throw std::invalid_argument("poincare_dual: degree " + std::to_string(p.degree) +
                                " exceeds 2n = " + std::to_string(2 * n));
  }
  SlopeProfile dual;
  dual.degree = 2 * n - p.degree;
  dual.entries.reserve(p.entries.size());
  // lambda -> n - lambda reverses the ordering.
  for (auto it = p.entries.rbegin(); it != p.entries.rend(); ++it) {
    dual.entries.push_back({Rat(n) - it->lambda, it->mult});
  }
  return dual;
}

bool is_reflection_symmetric(const SlopeProfile& p) {
  std::map<Rat, Int> mults;
  for (const auto& e : p.entries) {
    mults[e.lambda] += e.mult;
  }
  for (const auto& [lambda, mult] : mults) {
    const auto it = mults.find(Rat(p.degree) - lambda);
    if (it == mults.end() || it->second != mult) {
      return false;
    }
  }
  return true;
}

Rat min_slope(const SlopeProfile& p) {
  if (p.entries.empty()) {
    throw std::invalid_argument("min_slope: empty profile");
  }
  return p.entries.front().lambda;
}

bool is_pure_slope(const SlopeProfile& p, const Rat& s) {
  return p.entries.size() == 1 && p.entries.front().lambda == s;
}

const SlopeProfile& CrystalProfile::at_degree(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= profiles.size()) {
    throw std::invalid_argument("CrystalProfile: no profile at degree " + std::to_string(k));
  }
  return profiles[static_cast<std::size_t>(k)];
}

std::vector<std::string> validate_crystal(const CrystalProfile& c, Strictness strictness) {
  std::vector<std::string> violations;
  if (c.dim < 1) {
    violations.push_back("dimension must be at least 1");
    return violations;
  }
  const int top = 2 * c.dim;
  if (c.profiles.size() != static_cast<std::size_t>(top + 1)) {
    violations.push_back("expected profiles for degrees 0.." + std::to_string(top));
    return violations;
  }
  for (int k = 0; k <= top; ++k) {
    if (c.profiles[k].degree != k) {
      violations.push_back("profile at position " + std::to_string(k) +
                           " has degree " + std::to_string(c.profiles[k].degree));
    }
    for (auto& v : validate_profile(c.profiles[k], strictness)) {
      violations.push_back("degree " + std::to_string(k) + ": " + v);
    }
  }
  if (!violations.empty()) {
    return violations;
  }
  for (int k = 0; k <= c.dim; ++k) {
    const SlopeProfile dual = poincare_dual(c.profiles[k], c.dim);
    const SlopeProfile& other = c.profiles[top - k];
    bool equal = dual.entries.size() == other.entries.size();
    for (std::size_t t = 0; equal && t < dual.entries.size(); ++t) {
      equal = dual.entries[t].lambda == other.entries[t].lambda &&
              dual.entries[t].mult == other.entries[t].mult;
    }
    if (!equal) {
      violations.push_back("degrees " + std::to_string(k) + " and " + std::to_string(top - k) +
                           " are not exchanged by lambda -> n - lambda");
    }
  }
  const SlopeProfile& bottom = c.profiles[0];
  if (!(bottom.entries.size() == 1 && bottom.entries[0].lambda == 0 &&
        bottom.entries[0].mult == 1)) {
    violations.push_back("degree 0 profile is not {(0, 1)}");
  }
  const SlopeProfile& top_profile = c.profiles[top];
  if (!(top_profile.entries.size() == 1 && top_profile.entries[0].lambda == c.dim &&
        top_profile.entries[0].mult == 1)) {
    violations.push_back("degree 2n profile is not {(n, 1)}");
  }
  return violations;
}

IntMatrix slope_numbers(const CrystalProfile& c) {
  require_valid_crystal(c, "slope_numbers");
  const int n = c.dim;
  IntMatrix m = zero_matrix(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Rat acc(0);
      for (const auto& e : c.profiles[i + j].entries) {
        acc += tent_weight(e.lambda, i) * Rat(e.mult);
      }
      if (!rat_is_integer(acc)) {
        throw std::domain_error("slope_numbers: m^{" + std::to_string(i) + "," +
                                std::to_string(j) + "} = " + rat_string(acc) +
                                " is not an integer");
      }
      m[i][j] = numerator(acc);
    }
  }
  return m;
}

bool check_slope_symmetries(const CrystalProfile& c) {
  const IntMatrix m = slope_numbers(c);
  const int n = c.dim;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (m[i][j] != m[j][i] || m[i][j] != m[n - i][n - j]) {
        return false;
      }
    }
  }
  return true;
}

Int betti_from_slopes(const CrystalProfile& c, int k) {
  require_valid_crystal(c, "betti_from_slopes");
  if (k < 0 || k > 2 * c.dim) {
    throw std::invalid_argument("betti_from_slopes: degree " + std::to_string(k) +
                                " out of range");
  }
  const Int betti = c.profiles[k].betti();
  const IntMatrix m = slope_numbers(c);
  Int diag = 0;
  for (int i = 0; i <= c.dim; ++i) {
    const int j = k - i;
    if (j >= 0 && j <= c.dim) {
      diag += m[i][j];
    }
  }
  if (diag != betti) {
    throw std::domain_error("betti_from_slopes: sum of m^{i,j} over i+j=" +
                            std::to_string(k) + " is " + diag.str() +
                            " but the profile has " + betti.str() + " classes");
  }
  return betti;
}

Int crew_vmod_length(const SlopeProfile& p) {
  Rat acc(0);
  for (const auto& e : p.entries) {
    if (e.lambda < 0 || e.lambda >= 1) {
      throw std::invalid_argument("crew_vmod_length: slope " + rat_string(e.lambda) +
                                  " outside [0, 1)");
    }
    acc += (Rat(1) - e.lambda) * Rat(e.mult);
  }
  if (!rat_is_integer(acc) || acc < 0) {
    throw std::domain_error("crew_vmod_length: " + rat_string(acc) +
                            " is not a non-negative integer");
  }
  return numerator(acc);
}

M11Parts m11_decomposition(const SlopeProfile& p) {
  if (p.degree != 2) {
    throw std::invalid_argument("m11_decomposition: profile degree must be 2");
  }
  if (!is_reflection_symmetric(p)) {
    throw std::invalid_argument("m11_decomposition: profile is not self-dual under "
                                "lambda -> 2 - lambda");
  }
  M11Parts parts{Int(0), Rat(0)};
  for (const auto& e : p.entries) {
    if (e.lambda == 1) {
      parts.slope_one_mult = e.mult;
    } else if (e.lambda > 0 && e.lambda < 1) {
      parts.twice_subunit_sum += 2 * e.lambda * Rat(e.mult);
    }
  }
  return parts;
}

Int m11_from_h2(const SlopeProfile& p) {
  if (p.degree != 2) {
    throw std::invalid_argument("m11_from_h2: profile degree must be 2");
  }
  Rat acc(0);
  for (const auto& e : p.entries) {
    acc += tent_weight(e.lambda, 1) * Rat(e.mult);
  }
  if (!rat_is_integer(acc)) {
    throw std::domain_error("m11_from_h2: m^{1,1} = " + rat_string(acc) +
                            " is not an integer");
  }
  return numerator(acc);
}

}  // namespace wittnum
