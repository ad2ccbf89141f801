#include "wittnum/biseries.hpp"

#include <stdexcept>
#include <string>

namespace wittnum {

namespace {

void require_same_order(const BiSeries& a, const BiSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": truncation orders differ (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

}  // namespace

BiSeries::BiSeries(int order) : order_(order) {
  if (order < 0) {
    throw std::invalid_argument("BiSeries: negative truncation order");
  }
}

BiSeries BiSeries::constant(int order, const Rat& value) {
  BiSeries s(order);
  s.set_coeff(0, 0, value);
  return s;
}

Rat BiSeries::coeff(int i, int j) const {
  const auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void BiSeries::set_coeff(int i, int j, const Rat& value) {
  if (i < 0 || j < 0 || i + j > order_) {
    throw std::invalid_argument("BiSeries::set_coeff: monomial y^" + std::to_string(i) +
                                " z^" + std::to_string(j) + " outside truncation order " +
                                std::to_string(order_));
  }
  if (value == 0) {
    coeffs_.erase({i, j});
  } else {
    coeffs_[{i, j}] = value;
  }
}

BiSeries& BiSeries::operator+=(const BiSeries& rhs) {
  require_same_order(*this, rhs, "BiSeries::operator+=");
  for (const auto& [key, value] : rhs.coeffs_) {
    const Rat sum = coeff(key.first, key.second) + value;
    set_coeff(key.first, key.second, sum);
  }
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& rhs) {
  require_same_order(*this, rhs, "BiSeries::operator-=");
  for (const auto& [key, value] : rhs.coeffs_) {
    const Rat diff = coeff(key.first, key.second) - value;
    set_coeff(key.first, key.second, diff);
  }
  return *this;
}

BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs) {
  require_same_order(lhs, rhs, "BiSeries::operator*");
  BiSeries result(lhs.order());
  for (const auto& [ka, va] : lhs.coeffs_) {
    for (const auto& [kb, vb] : rhs.coeffs_) {
      const int i = ka.first + kb.first;
      const int j = ka.second + kb.second;
      if (i + j > result.order()) {
        continue;
      }
      const Rat sum = result.coeff(i, j) + va * vb;
      result.set_coeff(i, j, sum);
    }
  }
  return result;
}

bool operator==(const BiSeries& lhs, const BiSeries& rhs) {
  return lhs.order_ == rhs.order_ && lhs.coeffs_ == rhs.coeffs_;
}

BiSeries invert_unit(const BiSeries& a) {
  const Rat c0 = a.coeff(0, 0);
  if (c0 == 0) {
    throw std::invalid_argument("invert_unit: constant term is zero");
  }
  const int n = a.order();
  BiSeries b(n);
  // Graded recursion: the degree-t coefficients of b follow from lower ones.
  for (int t = 0; t <= n; ++t) {
    for (int i = 0; i <= t; ++i) {
      const int j = t - i;
      Rat acc = (t == 0) ? Rat(1) : Rat(0);
      for (const auto& [key, value] : a.coeffs()) {
        const auto& [p, q] = key;
        if (p == 0 && q == 0) {
          continue;
        }
        if (p <= i && q <= j) {
          acc -= value * b.coeff(i - p, j - q);
        }
      }
      b.set_coeff(i, j, acc / c0);
    }
  }
  return b;
}

BiSeries div_exact_z_minus_y(const BiSeries& a) {
  if (a.order() < 1) {
    throw std::invalid_argument("div_exact_z_minus_y: order must be at least 1");
  }
  if (a.coeff(0, 0) != 0) {
    throw std::domain_error("div_exact_z_minus_y: nonzero constant term");
  }
  const int n = a.order();
  BiSeries b(n - 1);
  // With (z - y) * b = a the coefficients satisfy a(i,j) = b(i,j-1) - b(i-1,j),
  // so along each antidiagonal b is a running prefix sum of a, and the final
  // telescoped sum must vanish exactly when a vanishes on z = y.
  for (int t = 1; t <= n; ++t) {
    Rat prefix(0);
    for (int i = 0; i < t; ++i) {
      prefix += a.coeff(i, t - i);
      b.set_coeff(i, t - 1 - i, prefix);
    }
    if (prefix + a.coeff(t, 0) != 0) {
      throw std::domain_error(
          "div_exact_z_minus_y: series is not divisible by (z - y); antidiagonal " +
          std::to_string(t) + " has nonzero trace");
    }
  }
  return b;
}

BiSeries one_plus_var_pow(int order, int exponent, bool use_z) {
  if (exponent < 0) {
    throw std::invalid_argument("one_plus_var_pow: negative exponent");
  }
  BiSeries s(order);
  for (int k = 0; k <= order && k <= exponent; ++k) {
    const Rat c(binomial(Int(exponent), Int(k)));
    if (use_z) {
      s.set_coeff(0, k, c);
    } else {
      s.set_coeff(k, 0, c);
    }
  }
  return s;
}

BiSeries shift_by_var(const BiSeries& a, bool use_z) {
  BiSeries s(a.order());
  for (const auto& [key, value] : a.coeffs()) {
    const int i = key.first + (use_z ? 0 : 1);
    const int j = key.second + (use_z ? 1 : 0);
    if (i + j <= s.order()) {
      s.set_coeff(i, j, value);
    }
  }
  return s;
}

BiSeries hodge_generating_series(int d, int order) {
  if (d < 1) {
    throw std::invalid_argument("hodge_generating_series: degree must be >= 1");
  }
  BiSeries numerator(order);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      const Int c = binomial(Int(d - 1), Int(i + j + 1));
      if (c != 0) {
        numerator.set_coeff(i, j, Rat(c));
      }
    }
  }
  BiSeries denominator = BiSeries::constant(order, Rat(1));
  for (int i = 1; i <= order; ++i) {
    for (int j = 1; i + j <= order; ++j) {
      const Int c = binomial(Int(d), Int(i + j));
      if (c != 0) {
        denominator.set_coeff(i, j, Rat(-c));
      }
    }
  }
  return numerator * invert_unit(denominator);
}

BiSeries hodge_generating_series_ratio(int d, int order) {
  if (d < 1) {
    throw std::invalid_argument("hodge_generating_series_ratio: degree must be >= 1");
  }
  // Numerator and denominator share the factor (z - y); dividing it out
  // leaves a denominator with constant term 1, safe to invert.
  const int ext = order + 1;
  BiSeries numerator = one_plus_var_pow(ext, d - 1, true) - one_plus_var_pow(ext, d - 1, false);
  BiSeries denominator = shift_by_var(one_plus_var_pow(ext, d, false), true) -
                         shift_by_var(one_plus_var_pow(ext, d, true), false);
  const BiSeries reduced_num = div_exact_z_minus_y(numerator);
  const BiSeries reduced_den = div_exact_z_minus_y(denominator);
  return reduced_num * invert_unit(reduced_den);
}

Int primitive_to_hodge(int p, int q, const Rat& primitive) {
  if (!rat_is_integer(primitive) || primitive < 0) {
    throw std::domain_error("primitive_to_hodge: coefficient " + rat_string(primitive) +
                            " at (" + std::to_string(p) + ", " + std::to_string(q) +
                            ") is not a non-negative integer");
  }
  Int h = numerator(primitive);
  if (p == q) {
    h += 1;
  }
  return h;
}

}  // namespace wittnum
