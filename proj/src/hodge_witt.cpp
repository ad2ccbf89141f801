#include "wittnum/hodge_witt.hpp"

#include <stdexcept>
#include <string>

namespace wittnum {

namespace {

void require_square_pair(const IntMatrix& a, const IntMatrix& b, const char* op) {
  const std::size_t n = a.size();
  if (n == 0 || !is_square(a, n) || !is_square(b, n)) {
    throw std::invalid_argument(std::string(op) + ": matrices must be square of equal size");
  }
}

std::vector<Int> betti_from_m(const IntMatrix& m, int n) {
  std::vector<Int> betti(2 * n + 1, Int(0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      betti[i + j] += m[i][j];
    }
  }
  return betti;
}

}  // namespace

IntMatrix hodge_witt_from_parts(const IntMatrix& m, const IntMatrix& T) {
  require_square_pair(m, T, "hodge_witt_from_parts");
  const int n = static_cast<int>(m.size()) - 1;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (T[i][j] < 0) {
        throw std::invalid_argument("hodge_witt_from_parts: negative domino number T^{" +
                                    std::to_string(i) + "," + std::to_string(j) + "}");
      }
    }
  }
  IntMatrix hW = zero_matrix(m.size(), m.size());
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      hW[i][j] = m[i][j] + at0(T, i, j) - 2 * at0(T, i - 1, j + 1) + at0(T, i - 2, j + 2);
    }
  }
  return hW;
}

IntMatrix mazur_ogus_dominoes(const IntMatrix& hodge, const IntMatrix& m, int n) {
  require_square_pair(hodge, m, "mazur_ogus_dominoes");
  if (static_cast<int>(hodge.size()) != n + 1) {
    throw std::invalid_argument("mazur_ogus_dominoes: matrices must be (n+1) x (n+1)");
  }
  IntMatrix T = zero_matrix(hodge.size(), hodge.size());
  // Downward induction on j: the formula for T^{i,j} consumes T^{i-1,j+1}
  // and T^{i-2,j+2}, both from higher columns.
  for (int j = n; j >= 0; --j) {
    for (int i = 0; i <= n; ++i) {
      const Int value =
          hodge[i][j] - m[i][j] + 2 * at0(T, i - 1, j + 1) - at0(T, i - 2, j + 2);
      if (value < 0) {
        throw std::domain_error("mazur_ogus_dominoes: T^{" + std::to_string(i) + "," +
                                std::to_string(j) + "} = " + value.str() +
                                " is negative; the input is not consistent with "
                                "hW^{i,j} = h^{i,j}");
      }
      T[i][j] = value;
    }
  }
  return T;
}

bool check_crew_formula(const HodgeWittTable& t) {
  if (!t.hodge.has_value() && !t.chi.has_value()) {
    throw std::invalid_argument("check_crew_formula: needs hodge numbers or chi values");
  }
  const int n = t.dim;
  for (int i = 0; i <= n; ++i) {
    Int hw_sum = 0;
    Int hodge_sum = 0;
    for (int j = 0; j <= n; ++j) {
      const Int sign = (j % 2 == 0) ? 1 : -1;
      hw_sum += sign * t.hW[i][j];
      if (t.hodge.has_value()) {
        hodge_sum += sign * (*t.hodge)[i][j];
      }
    }
    const Int chi_i = t.chi.has_value() ? (*t.chi)[i]
                                        : hodge_sum;
    if (hw_sum != chi_i) {
      return false;
    }
    if (t.hodge.has_value() && hodge_sum != chi_i) {
      return false;
    }
  }
  return true;
}

bool check_ekedahl_bound(const HodgeWittTable& t, bool mazur_ogus) {
  if (!t.hodge.has_value()) {
    throw std::invalid_argument("check_ekedahl_bound: hodge numbers absent");
  }
  for (int i = 0; i <= t.dim; ++i) {
    for (int j = 0; j <= t.dim; ++j) {
      const Int& hw = t.hW[i][j];
      const Int& h = (*t.hodge)[i][j];
      if (hw > h || (mazur_ogus && hw != h)) {
        return false;
      }
    }
  }
  return true;
}

bool check_domino_duality(const IntMatrix& T, int n) {
  if (!is_square(T, static_cast<std::size_t>(n + 1))) {
    throw std::invalid_argument("check_domino_duality: T must be (n+1) x (n+1)");
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const int di = n - i - 2;
      const int dj = n - j + 2;
      if (di >= 0 && di <= n && dj >= 0 && dj <= n) {
        if (T[i][j] != T[di][dj]) {
          return false;
        }
      } else if (T[i][j] != 0) {
        // A domino whose dual slot lies outside the complex must vanish.
        return false;
      }
    }
  }
  return true;
}

bool check_hw_symmetries(const HodgeWittTable& t,
                         const std::optional<std::vector<Int>>& betti_override) {
  const int n = t.dim;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (n <= 3 && t.hW[i][j] != t.hW[j][i]) {
        return false;
      }
      if (t.hW[i][j] != t.hW[n - i][n - j]) {
        return false;
      }
    }
  }
  std::optional<std::vector<Int>> betti;
  if (t.m.has_value()) {
    betti = betti_from_m(*t.m, n);
  } else if (betti_override.has_value()) {
    betti = betti_override;
  }
  if (betti.has_value()) {
    if (betti->size() != static_cast<std::size_t>(2 * n + 1)) {
      throw std::invalid_argument("check_hw_symmetries: betti vector must have 2n+1 entries");
    }
    for (int k = 0; k <= 2 * n; ++k) {
      Int sum = 0;
      for (int i = 0; i <= n; ++i) {
        const int j = k - i;
        if (j >= 0 && j <= n) {
          sum += t.hW[i][j];
        }
      }
      if (sum != (*betti)[k]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace wittnum
