#include "wittnum/rational.hpp"

#include <stdexcept>

namespace wittnum {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) {
    throw std::invalid_argument("make_rat: zero denominator");
  }
  // Division canonicalizes (lowest terms, positive denominator).
  return Rat(num) / Rat(den);
}

bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

Int rat_to_int(const Rat& r) {
  if (!rat_is_integer(r)) {
    throw std::domain_error("rat_to_int: " + rat_string(r) + " is not an integer");
  }
  return numerator(r);
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
  }
}

std::string rat_string(const Rat& r) {
  if (rat_is_integer(r)) {
    return numerator(r).str();
  }
  return numerator(r).str() + "/" + denominator(r).str();
}

Int binomial(const Int& n, const Int& k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be non-negative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  Int kk = k;
  if (n - k < kk) {
    kk = n - k;
  }
  Int result = 1;
  for (Int i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact at every step
  }
  return result;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) {
    throw std::domain_error("exact_div: " + b.str() + " does not divide " + a.str());
  }
  return a / b;
}

Int int_pow(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

bool is_prime(const Int& n) {
  if (n < 2) {
    return false;
  }
  if (n % 2 == 0) {
    return n == 2;
  }
  for (Int f = 3; f * f <= n; f += 2) {
    if (n % f == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace wittnum
