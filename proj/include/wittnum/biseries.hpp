#pragma once

#include "wittnum/rational.hpp"

#include <map>
#include <utility>

namespace wittnum {

// Truncated bivariate power series over Rat. Monomials y^i z^j with
// i + j <= order are tracked; absent coefficients are zero and stored
// coefficients are nonzero. Ring operations never produce terms past the
// truncation order.
class BiSeries {
 public:
  using Key = std::pair<int, int>;
  using CoeffMap = std::map<Key, Rat>;

  explicit BiSeries(int order);

  static BiSeries constant(int order, const Rat& value);

  int order() const { return order_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  Rat coeff(int i, int j) const;
  void set_coeff(int i, int j, const Rat& value);

  bool is_zero() const { return coeffs_.empty(); }

  BiSeries& operator+=(const BiSeries& rhs);
  BiSeries& operator-=(const BiSeries& rhs);

  friend BiSeries operator+(BiSeries lhs, const BiSeries& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BiSeries operator-(BiSeries lhs, const BiSeries& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs);
  friend bool operator==(const BiSeries& lhs, const BiSeries& rhs);

 private:
  int order_;
  CoeffMap coeffs_;
};

// Multiplicative inverse up to the truncation order; the constant term must
// be nonzero.
BiSeries invert_unit(const BiSeries& a);

// Exact quotient a / (z - y). Requires a to vanish along z = y up to the
// truncation order (every antidiagonal coefficient sum is zero); the result
// has order a.order() - 1.
BiSeries div_exact_z_minus_y(const BiSeries& a);

// (1 + y)^e, or (1 + z)^e when use_z is set; e >= 0.
BiSeries one_plus_var_pow(int order, int exponent, bool use_z);

// Multiplies by the monomial y (or z), truncating at the series order.
BiSeries shift_by_var(const BiSeries& a, bool use_z);

// Generating series whose (p, q) coefficient is the primitive Hodge number
// h0^{p,q} of a smooth degree-d hypersurface of dimension p + q. Expanded as
// a quotient of binomial sums: the numerator has (i, j) coefficient
// C(d-1, i+j+1) and the denominator is 1 - sum_{i,j>=1} C(d, i+j) y^i z^j,
// whose constant term 1 makes the inversion well defined.
BiSeries hodge_generating_series(int d, int order);

// The same series computed along an independent route: the quotient
// ((1+z)^{d-1} - (1+y)^{d-1}) / (z(1+y)^d - y(1+z)^d), with numerator and
// denominator first divided exactly by their common factor (z - y). Kept as
// a cross-check oracle for hodge_generating_series.
BiSeries hodge_generating_series_ratio(int d, int order);

// Full Hodge number from a primitive one: adds 1 on the diagonal p == q.
// The coefficient must be a non-negative integer.
Int primitive_to_hodge(int p, int q, const Rat& primitive);

}  // namespace wittnum
