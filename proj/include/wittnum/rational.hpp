#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wittnum {

// Every scalar in this library is an exact integer or an exact rational;
// no operation anywhere rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// num/den, canonicalized to lowest terms with a positive denominator.
// Throws std::invalid_argument when den == 0.
Rat make_rat(const Int& num, const Int& den);

bool rat_is_integer(const Rat& r);

// Exact conversion; throws std::domain_error for a nontrivial denominator.
Int rat_to_int(const Rat& r);

// Parses "a" or "a/b" (either part may carry a sign).
Rat parse_rat(const std::string& text);

// "a" when the denominator is 1, "a/b" otherwise.
std::string rat_string(const Rat& r);

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Int binomial(const Int& n, const Int& k);

// Exact integer quotient; throws std::domain_error when b does not divide a.
Int exact_div(const Int& a, const Int& b);

Int int_pow(const Int& base, unsigned exp);

bool is_prime(const Int& n);

}  // namespace wittnum
