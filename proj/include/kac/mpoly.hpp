#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kac/bigrational.hpp"

namespace kac {

using Exponent = std::vector<unsigned>;

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// number of variables. Zero coefficients are never stored.
class MPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit MPoly(std::size_t arity = 0) : arity_(arity) {}
  static MPoly constant(std::size_t arity, const Rational& c);
  static MPoly variable(std::size_t arity, std::size_t index);
  static MPoly monomial(const Exponent& e, const Rational& c);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Exponent& e) const;
  /// -1 for the zero polynomial.
  long total_degree() const;

  void add_term(const Exponent& e, const Rational& c);

  /// Terms of total degree exactly d.
  MPoly homogeneous_part(unsigned d) const;
  /// Terms of total degree at most d.
  MPoly truncated(unsigned d) const;
  /// Product truncated to total degree at most cap.
  static MPoly mul_truncated(const MPoly& a, const MPoly& b, unsigned cap);

  Rational evaluate(std::span<const Rational> point) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  MPoly operator-() const;

  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Highest total degree first; `names` supplies one name per variable.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t arity_;
  Terms terms_;
};

}  // namespace kac
