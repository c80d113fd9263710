#pragma once

#include <optional>
#include <string>

#include "kac/bigrational.hpp"
#include "kac/qpoly.hpp"

namespace kac {

/// Rational function num/den in q in canonical form: num and den have integer
/// coefficients, are coprime in Q[q], their integer contents are coprime, and
/// lead(den) > 0. Equal functions therefore have equal representations.
class RatFunc {
 public:
  RatFunc() : den_{Integer(1)} {}
  RatFunc(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const QPoly& p);

  /// Canonical form of num/den; throws ArgumentError when den = 0.
  static RatFunc normalize(const QPoly& num, const QPoly& den);
  static RatFunc q_power(long e);

  QPoly num() const;
  QPoly den() const;

  bool is_zero() const noexcept { return num_.empty(); }
  bool is_polynomial() const noexcept { return den_.size() == 1; }
  /// The polynomial num/den when den is constant.
  std::optional<QPoly> as_polynomial() const;

  /// Value at x; throws ArgumentError if x is a pole.
  Rational operator()(const Rational& x) const;

  /// f(q^d).
  RatFunc substitute_power(unsigned d) const;
  RatFunc derivative() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const Rational& c);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Rational& c) { return a *= c; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string to_string() const;

 private:
  std::vector<Integer> num_;
  std::vector<Integer> den_;
};

/// Value at q = 1 of (q-1)^e * f. Throws ArgumentError if a pole at q = 1
/// survives the cancellation.
Rational ratfunc_limit_with_pole_cancellation(const RatFunc& f, int e);

}  // namespace kac
