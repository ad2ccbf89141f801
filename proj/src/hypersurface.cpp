#include "wittnum/hypersurface.hpp"

#include "wittnum/biseries.hpp"

#include <stdexcept>
#include <string>

namespace wittnum {

namespace {

void require_dim(int n, const char* op) {
  if (n < 2 || n > 4) {
    throw std::invalid_argument(std::string(op) + ": dimension must be 2, 3 or 4");
  }
}

void require_degree(int d, const char* op) {
  if (d < 1) {
    throw std::invalid_argument(std::string(op) + ": degree must be >= 1");
  }
}

Int h02(const Int& d) { return exact_div((d - 1) * (d - 2) * (d - 3), 6); }
Int h11_dim2(const Int& d) { return exact_div(d * (2 * d * d - 6 * d + 7), 3); }
Int h03(const Int& d) { return exact_div((d - 1) * (d - 2) * (d - 3) * (d - 4), 24); }
Int h12(const Int& d) {
  return exact_div((d - 1) * (d - 2) * (11 * d * d - 17 * d + 12), 24);
}
Int h04(const Int& d) {
  return exact_div((d - 1) * (d - 2) * (d - 3) * (d - 4) * (d - 5), 120);
}
Int h13(const Int& d) {
  return exact_div(2 * (d - 1) * (d - 2) * (13 * d * d * d - 51 * d * d + 56 * d - 30),
                   120);
}
Int h22(const Int& d) {
  // Full middle Hodge number (diagonal class included); agrees with the
  // generating series for every d, classical anchors h^{2,2} = 21 for the
  // cubic and 2 for the quadric fourfold.
  return exact_div(d * (11 * int_pow(d, 4) - 55 * d * d * d + 115 * d * d - 125 * d + 74),
                   20);
}

Int betti_closed(int n, const Int& d) {
  switch (n) {
    case 2:
      return d * d * d - 4 * d * d + 6 * d - 2;
    case 3:
      return (d - 1) * (d - 2) * (d * d - 2 * d + 2);
    default:
      return int_pow(d, 5) - 6 * int_pow(d, 4) + 15 * d * d * d - 20 * d * d + 15 * d - 4;
  }
}

}  // namespace

IntMatrix hodge_numbers_closed(int n, int d) {
  require_dim(n, "hodge_numbers_closed");
  require_degree(d, "hodge_numbers_closed");
  const Int dd(d);
  IntMatrix h = zero_matrix(n + 1, n + 1);
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (p + q != n) {
        h[p][q] = (p == q) ? 1 : 0;
      }
    }
  }
  switch (n) {
    case 2:
      h[0][2] = h[2][0] = h02(dd);
      h[1][1] = h11_dim2(dd);
      break;
    case 3:
      h[0][3] = h[3][0] = h03(dd);
      h[1][2] = h[2][1] = h12(dd);
      break;
    default:
      h[0][4] = h[4][0] = h04(dd);
      h[1][3] = h[3][1] = h13(dd);
      h[2][2] = h22(dd);
      break;
  }
  return h;
}

IntMatrix hodge_numbers_series(int n, int d) {
  if (n < 1) {
    throw std::invalid_argument("hodge_numbers_series: dimension must be >= 1");
  }
  require_degree(d, "hodge_numbers_series");
  const BiSeries series = hodge_generating_series(d, n);
  IntMatrix h = zero_matrix(n + 1, n + 1);
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (p + q == n) {
        h[p][q] = primitive_to_hodge(p, q, series.coeff(p, q));
      } else {
        h[p][q] = (p == q) ? 1 : 0;
      }
    }
  }
  return h;
}

Int betti_number(int n, int d) {
  require_dim(n, "betti_number");
  require_degree(d, "betti_number");
  const Int b = betti_closed(n, Int(d));
  const IntMatrix h = hodge_numbers_closed(n, d);
  Int middle_sum = 0;
  for (int p = 0; p <= n; ++p) {
    middle_sum += h[p][n - p];
  }
  if (middle_sum != b) {
    throw std::domain_error("betti_number: closed form " + b.str() +
                            " disagrees with the Hodge sum " + middle_sum.str() +
                            " at n=" + std::to_string(n) + ", d=" + std::to_string(d));
  }
  return b;
}

DominoBounds maximal_domino_numbers(int n, int d, bool slope_condition_met) {
  require_dim(n, "maximal_domino_numbers");
  require_degree(d, "maximal_domino_numbers");
  const IntMatrix h = hodge_numbers_closed(n, d);
  DominoBounds result;
  result.exact = slope_condition_met;
  result.T = zero_matrix(n + 1, n + 1);
  result.T[0][n] = h[0][n];
  // The slots forced by duality: T^{i,j} == T^{n-i-2,n-j+2}.
  if (n == 3) {
    result.T[1][2] = result.T[0][3];
  }
  if (n == 4) {
    result.T[1][3] = h[1][3] + 2 * h[0][4];
    result.T[2][2] = result.T[0][4];
  }
  return result;
}

std::pair<Int, Int> general_type_margins(int d) {
  require_degree(d, "general_type_margins");
  const Int dd(d);
  const Int margin2 = exact_div(dd * dd * dd - 4 * dd + 6, 3);
  const Int margin4 = 2 * dd * dd - 5 * dd + 4;
  const IntMatrix h = hodge_numbers_closed(2, d);
  const Int direct2 = h[1][1] - 2 * h[0][2];
  const Int direct4 = h[1][1] - 4 * h[0][2];
  if (margin2 != direct2 || margin4 != direct4) {
    throw std::domain_error("general_type_margins: closed forms disagree with direct "
                            "differences at d=" + std::to_string(d));
  }
  if (d >= 5 && margin4 <= 0) {
    throw std::domain_error("general_type_margins: h^{1,1} - 4 p_g must be positive for "
                            "d >= 5");
  }
  return {margin2, margin4};
}

SlopeProfile hypersurface_middle_profile(int n, int d, bool max_domino_slopes) {
  require_dim(n, "hypersurface_middle_profile");
  require_degree(d, "hypersurface_middle_profile");
  SlopeProfile p;
  p.degree = n;
  const Int b = betti_number(n, d);
  if (max_domino_slopes) {
    // Pure slope 1 (n=2), all of H^3 at slope 3/2 (n=3), pure slope 2 (n=4):
    // each meets the corresponding maximal-domino slope condition.
    if (b > 0) {
      if (n == 2) {
        p.entries.push_back({Rat(1), b});
      } else if (n == 3) {
        p.entries.push_back({make_rat(3, 2), b});
      } else {
        p.entries.push_back({Rat(2), b});
      }
    }
  } else {
    // Newton polygon equal to the Hodge polygon.
    const IntMatrix h = hodge_numbers_closed(n, d);
    for (int q = 0; q <= n; ++q) {
      if (h[q][n - q] > 0) {
        p.entries.push_back({Rat(q), h[q][n - q]});
      }
    }
  }
  return p;
}

CrystalProfile hypersurface_crystal(int n, int d, bool max_domino_slopes) {
  require_dim(n, "hypersurface_crystal");
  require_degree(d, "hypersurface_crystal");
  CrystalProfile c;
  c.dim = n;
  c.profiles.resize(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    c.profiles[k].degree = k;
    if (k == n) {
      c.profiles[k] = hypersurface_middle_profile(n, d, max_domino_slopes);
    } else if (k % 2 == 0) {
      c.profiles[k].entries.push_back({Rat(k / 2), Int(1)});
    }
  }
  return c;
}

}  // namespace wittnum
