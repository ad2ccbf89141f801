#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wittnum/biseries.hpp"
#include "wittnum/rational.hpp"

#include <random>

using namespace wittnum;

namespace {

// Uniform random polynomial truncations for the ring-law properties.
BiSeries random_series(std::mt19937_64& rng, int order, bool unit) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  BiSeries s(order);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      s.set_coeff(i, j, Rat(coeff(rng)));
    }
  }
  if (unit && s.coeff(0, 0) == 0) {
    s.set_coeff(0, 0, Rat(1));
  }
  return s;
}

}  // namespace

TEST_CASE("binomial small values and boundaries") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(50, 25) == Int("126410606437752"));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rat("3/2") == make_rat(3, 2));
  CHECK(parse_rat("-3/2") == make_rat(-3, 2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("6/-4") == make_rat(-3, 2));
  CHECK(rat_string(make_rat(6, -4)) == "-3/2");
  CHECK(rat_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK(rat_to_int(make_rat(8, 4)) == 2);
  CHECK_THROWS_AS(rat_to_int(make_rat(1, 2)), std::domain_error);
}

TEST_CASE("series multiplication on small polynomials") {
  BiSeries a(2);
  a.set_coeff(0, 0, Rat(1));
  a.set_coeff(1, 0, Rat(1));  // 1 + y
  BiSeries b(2);
  b.set_coeff(0, 0, Rat(1));
  b.set_coeff(0, 1, Rat(1));  // 1 + z
  const BiSeries ab = a * b;
  CHECK(ab.coeff(0, 0) == Rat(1));
  CHECK(ab.coeff(1, 0) == Rat(1));
  CHECK(ab.coeff(0, 1) == Rat(1));
  CHECK(ab.coeff(1, 1) == Rat(1));

  CHECK(a * BiSeries::constant(2, Rat(1)) == a);

  BiSeries yplusz(2);
  yplusz.set_coeff(1, 0, Rat(1));
  yplusz.set_coeff(0, 1, Rat(1));
  BiSeries yminusz(2);
  yminusz.set_coeff(1, 0, Rat(1));
  yminusz.set_coeff(0, 1, Rat(-1));
  const BiSeries diff = yplusz * yminusz;  // y^2 - z^2
  CHECK(diff.coeff(2, 0) == Rat(1));
  CHECK(diff.coeff(0, 2) == Rat(-1));
  CHECK(diff.coeff(1, 1) == Rat(0));

  BiSeries other_order(3);
  CHECK_THROWS_AS(a * other_order, std::invalid_argument);
}

TEST_CASE("invert_unit: geometric series and constants") {
  BiSeries one_minus_y(3);
  one_minus_y.set_coeff(0, 0, Rat(1));
  one_minus_y.set_coeff(1, 0, Rat(-1));
  const BiSeries inv = invert_unit(one_minus_y);
  for (int k = 0; k <= 3; ++k) {
    CHECK(inv.coeff(k, 0) == Rat(1));
  }

  CHECK(invert_unit(BiSeries::constant(2, Rat(2))) == BiSeries::constant(2, make_rat(1, 2)));

  BiSeries one_minus_yz(4);
  one_minus_yz.set_coeff(0, 0, Rat(1));
  one_minus_yz.set_coeff(1, 1, Rat(-1));
  const BiSeries inv2 = invert_unit(one_minus_yz);
  CHECK(inv2.coeff(0, 0) == Rat(1));
  CHECK(inv2.coeff(1, 1) == Rat(1));
  CHECK(inv2.coeff(2, 2) == Rat(1));
  CHECK(inv2.coeff(1, 0) == Rat(0));

  CHECK_THROWS_AS(invert_unit(BiSeries(2)), std::invalid_argument);
}

TEST_CASE("div_exact_z_minus_y on hand-expanded examples") {
  // z^2 - y^2 = (z - y)(z + y)
  BiSeries a(2);
  a.set_coeff(0, 2, Rat(1));
  a.set_coeff(2, 0, Rat(-1));
  const BiSeries q = div_exact_z_minus_y(a);
  CHECK(q.order() == 1);
  CHECK(q.coeff(1, 0) == Rat(1));
  CHECK(q.coeff(0, 1) == Rat(1));

  // z - y
  BiSeries b(1);
  b.set_coeff(0, 1, Rat(1));
  b.set_coeff(1, 0, Rat(-1));
  CHECK(div_exact_z_minus_y(b) == BiSeries::constant(0, Rat(1)));

  // (1+z)^3 - (1+y)^3 = (z - y)(3 + 3(y + z) + y^2 + yz + z^2), expanded by hand
  const BiSeries c = one_plus_var_pow(3, 3, true) - one_plus_var_pow(3, 3, false);
  const BiSeries r = div_exact_z_minus_y(c);
  CHECK(r.coeff(0, 0) == Rat(3));
  CHECK(r.coeff(1, 0) == Rat(3));
  CHECK(r.coeff(0, 1) == Rat(3));
  CHECK(r.coeff(2, 0) == Rat(1));
  CHECK(r.coeff(1, 1) == Rat(1));
  CHECK(r.coeff(0, 2) == Rat(1));

  // y + z does not vanish on the diagonal.
  BiSeries bad(1);
  bad.set_coeff(1, 0, Rat(1));
  bad.set_coeff(0, 1, Rat(1));
  CHECK_THROWS_AS(div_exact_z_minus_y(bad), std::domain_error);
}

TEST_CASE("hodge generating series: anchor coefficients") {
  // Quartic surface: primitive (1,1) coefficient 19, so h^{1,1} = 20.
  const BiSeries quartic = hodge_generating_series(4, 2);
  CHECK(quartic.coeff(1, 1) == Rat(19));
  CHECK(primitive_to_hodge(1, 1, quartic.coeff(1, 1)) == 20);
  CHECK(quartic.coeff(0, 2) == Rat(1));

  // Quintic threefold: h^{1,2} = 101.
  const BiSeries quintic = hodge_generating_series(5, 3);
  CHECK(quintic.coeff(1, 2) == Rat(101));
  CHECK(quintic.coeff(0, 3) == Rat(1));

  // A hyperplane has no primitive cohomology.
  CHECK(hodge_generating_series(1, 6).is_zero());
}

TEST_CASE("primitive_to_hodge diagonal correction and guards") {
  CHECK(primitive_to_hodge(0, 2, Rat(4)) == 4);
  CHECK(primitive_to_hodge(2, 2, Rat(0)) == 1);
  CHECK_THROWS_AS(primitive_to_hodge(1, 1, make_rat(1, 2)), std::domain_error);
  CHECK_THROWS_AS(primitive_to_hodge(1, 1, Rat(-1)), std::domain_error);
}

TEST_CASE("deligne-form expansion equals the ratio-form oracle") {
  for (int d = 1; d <= 10; ++d) {
    CHECK(hodge_generating_series(d, 10) == hodge_generating_series_ratio(d, 10));
  }
}

TEST_CASE("generating series coefficients are non-negative integers") {
  for (int d = 1; d <= 10; ++d) {
    const BiSeries s = hodge_generating_series(d, 8);
    for (const auto& [key, value] : s.coeffs()) {
      CHECK(rat_is_integer(value));
      CHECK(value >= 0);
    }
  }
}

TEST_CASE("property: ring laws on random truncated polynomials") {
  std::mt19937_64 rng(20260810);
  for (int iter = 0; iter < 200; ++iter) {
    const int order = 1 + static_cast<int>(rng() % 5);
    const BiSeries a = random_series(rng, order, false);
    const BiSeries b = random_series(rng, order, false);
    const BiSeries c = random_series(rng, order, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == BiSeries(order));
  }
}

TEST_CASE("property: series times its inverse is one") {
  std::mt19937_64 rng(987654321);
  for (int iter = 0; iter < 100; ++iter) {
    const int order = 1 + static_cast<int>(rng() % 5);
    const BiSeries a = random_series(rng, order, true);
    CHECK(a * invert_unit(a) == BiSeries::constant(order, Rat(1)));
  }
}

TEST_CASE("property: multiplying by (z - y) and dividing returns the input") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 100; ++iter) {
    const int order = 1 + static_cast<int>(rng() % 5);
    const BiSeries b = random_series(rng, order, false);
    // (z - y) * b lives one order higher.
    BiSeries z_minus_y(order + 1);
    z_minus_y.set_coeff(0, 1, Rat(1));
    z_minus_y.set_coeff(1, 0, Rat(-1));
    BiSeries lifted(order + 1);
    for (const auto& [key, value] : b.coeffs()) {
      lifted.set_coeff(key.first, key.second, value);
    }
    const BiSeries product = z_minus_y * lifted;
    CHECK(div_exact_z_minus_y(product) == b);
  }
}
