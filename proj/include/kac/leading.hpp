#pragma once

#include <map>
#include <string>
#include <vector>

#include "kac/bigrational.hpp"
#include "kac/graph_counts.hpp"
#include "kac/mpoly.hpp"
#include "kac/quiver.hpp"

namespace kac {

/// Polynomial in the edge multiplicities g_ij (variables in pair_index order).
class GPolynomial {
 public:
  explicit GPolynomial(std::size_t n) : n_(n), p_(pair_count(n)) {}
  GPolynomial(std::size_t n, MPoly p);

  /// sum_k coeffs[k] * prod_ij C(g_ij, k_ij).
  static GPolynomial from_binomial_basis(std::size_t n, const std::map<EdgeVector, Rational>& coeffs);

  std::size_t vertices() const noexcept { return n_; }
  const MPoly& monomials() const noexcept { return p_; }
  long total_degree() const { return p_.total_degree(); }
  /// Coefficients in the basis prod_ij C(g_ij, k_ij); zero entries omitted.
  std::map<EdgeVector, Rational> binomial_basis() const;
  /// Exponent -> coefficient of the terms of highest total degree.
  std::map<EdgeVector, Rational> top_homogeneous() const;
  Rational operator()(const EdgeVector& g) const;
  /// Variable names g11, g12, ...; just "g" when n = 1.
  static std::vector<std::string> variable_names(std::size_t n);
  std::string to_string() const;

  friend bool operator==(const GPolynomial&, const GPolynomial&) = default;

 private:
  std::size_t n_;
  MPoly p_;
};

/// Highest-degree homogeneous component of d^s/dq^s A_Gamma(alpha, q)|_{q=1}
/// as a polynomial in the g_ij. Each ell has |ell| = s + |alpha| - 1 and its
/// coefficient already includes the 1/alpha! prefactor.
struct LeadingComponent {
  DimVector alpha;
  unsigned s = 0;
  std::map<EdgeVector, Rational> terms;

  GPolynomial as_polynomial(std::size_t n) const;
  friend bool operator==(const LeadingComponent&, const LeadingComponent&) = default;
};

/// { p : p_ii <= k_ii, p_ij = k_ij for i < j }, ordered lexicographically.
std::vector<EdgeVector> s_k_set(const EdgeVector& k);

/// c^alpha_{kp} = prod_i sum_j C(p_ii, j) C(alpha_i, k_ii - p_ii - j) 2^(p_ii - j).
/// Throws ArgumentError unless p is in s_k_set(k).
Integer c_coefficient(const DimVector& alpha, const EdgeVector& k, const EdgeVector& p);

/// Leading component via the Stirling-number formula for general s.
LeadingComponent leading_component(std::size_t n, const DimVector& alpha, unsigned s);

/// Leading component of A_Gamma(alpha, 1) via 2^t(k) G_k^alpha / alpha!
/// (the s = 0 route, kept separate from the general formula).
LeadingComponent leading_component_at_one(std::size_t n, const DimVector& alpha);

/// The same coefficient families from precomputed connected counts.
LeadingComponent leading_component(std::size_t n, const DimVector& alpha, unsigned s,
                                   const GraphCountTable& graphs);

/// Exact interpolation of g -> d^s/dq^s A_Gamma(alpha, q)|_{q=1} over the box
/// {0..degree_cap}^(n(n+1)/2) by multivariate Newton forward differences. The
/// box is extended by one in every direction and all differences of order
/// above degree_cap must vanish there; otherwise throws InvariantError.
/// Throws ArgumentError when degree_cap < s + |alpha| - 1.
GPolynomial fit_polynomial_in_g(std::size_t n, const DimVector& alpha, unsigned s, unsigned degree_cap,
                                unsigned threads = 1);

/// fit_polynomial_in_g for several derivative orders from one set of samples;
/// degree_cap must cover the largest s.
std::vector<GPolynomial> fit_polynomials_in_g(std::size_t n, const DimVector& alpha,
                                              const std::vector<unsigned>& s_values, unsigned degree_cap,
                                              unsigned threads = 1);

}  // namespace kac
