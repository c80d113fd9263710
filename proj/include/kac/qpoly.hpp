#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kac/bigrational.hpp"

namespace kac {

/// Dense univariate polynomial in q over the rationals. The highest stored
/// coefficient is nonzero; the zero polynomial stores nothing.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, std::size_t exponent);
  /// 1 + q + ... + q^(len-1); zero for len = 0.
  static QPoly geometric(std::size_t len);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const Rational& coeff(std::size_t e) const;
  std::span<const Rational> coefficients() const noexcept { return c_; }
  const Rational& lead() const;
  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::size_t low_degree() const;

  bool has_integer_coefficients() const;

  Rational operator()(const Rational& x) const;

  QPoly derivative() const;
  /// p(q^d).
  QPoly compose_power(unsigned d) const;
  /// p(q) * q^e.
  QPoly shifted(std::size_t e) const;
  /// Coefficients of p(1 + x) as a polynomial in x.
  QPoly taylor_shift_one() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
  QPoly operator-() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Human readable, highest power first: "q^5 + q^3", "-1/2*q + 3".
  std::string to_string(std::string_view var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

QPoly pow(const QPoly& p, unsigned e);

/// Euclidean division over the rationals; throws ArgumentError on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Division that must be exact; throws InvariantError on a nonzero remainder.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// Rational c (same sign as lead(p)) and primitive integer polynomial P with
/// p = c * P and lead(P) > 0. For p = 0 returns (0, 0).
std::pair<Rational, QPoly> content_primitive(const QPoly& p);

/// Primitive integer gcd with positive leading coefficient; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// t-th derivative of p evaluated at q = 1.
Rational qpoly_taylor_at_1(const QPoly& p, unsigned t);

/// Largest m with (q-1)^m dividing p; throws ArgumentError for p = 0.
unsigned vanishing_order_at_1(const QPoly& p);

}  // namespace kac
