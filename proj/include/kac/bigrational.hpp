#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kac {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);

// C(n, k) with the convention C(n, k) = 0 unless 0 <= k <= n.
Integer binomial(long n, long k);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "7", "-3/4".
std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

// Accepts "a" or "a/b" with optional sign; throws ArgumentError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace kac
