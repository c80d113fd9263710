#pragma once

#include <span>
#include <string>

#include "kac/bigrational.hpp"
#include "kac/qpoly.hpp"

namespace kac {

/// Polynomial in an integer variable b. Shares QPoly's dense representation.
class BPoly {
 public:
  BPoly() = default;
  explicit BPoly(QPoly coeffs) : p_(std::move(coeffs)) {}

  long degree() const noexcept { return p_.degree(); }
  const Rational& lead() const { return p_.lead(); }
  const QPoly& coefficients() const noexcept { return p_; }
  Rational operator()(const Rational& b) const { return p_(b); }
  std::string to_string() const { return p_.to_string("b"); }

  friend bool operator==(const BPoly&, const BPoly&) = default;

 private:
  QPoly p_;
};

/// Stirling number of the second kind S(l, k).
Integer stirling2(unsigned l, unsigned k);

/// Gaussian binomial [b choose k]_q; zero when k > b.
QPoly qbinom(unsigned b, unsigned k);

/// The unique polynomial of degree < values.size() through
/// (first_node + j, values[j]), via Newton forward differences.
BPoly interpolate_consecutive(long first_node, std::span<const Rational> values);

/// P_{k,t}(b) = d^t/dq^t [b choose k]_q at q = 1, as a polynomial in b.
BPoly qbinom_derivative_poly(unsigned k, unsigned t);

/// d^m/dq^m of (sum_{j<=b-i} q^j) / (sum_{j<i} q^j) at q = 1, for an integer b >= i - 1.
Rational ratio_derivative_value(unsigned i, unsigned m, unsigned b);

/// p_{i,m}(b), the polynomial interpolating ratio_derivative_value over b >= i - 1.
BPoly ratio_derivative_poly(unsigned i, unsigned m);

}  // namespace kac
