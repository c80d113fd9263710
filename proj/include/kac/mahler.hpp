#pragma once

#include <functional>
#include <map>
#include <optional>

#include "kac/bigrational.hpp"
#include "kac/leading.hpp"
#include "kac/qpoly.hpp"
#include "kac/quiver.hpp"
#include "kac/ratfunc.hpp"

namespace kac {

/// b -> f(q^b) for an integer exponent vector b, one entry per vertex pair.
using GridFunction = std::function<QPoly(const EdgeVector&)>;

/// c_ell(q) = sum_{j <= ell} prod_v (-1)^j_v q^(j_v(j_v-1)/2) [ell_v choose j_v]_q f(q^(ell - j)).
/// Throws InvariantError if the result has a non-integer coefficient.
QPoly qdifference_coefficient(const GridFunction& evaluate, const EdgeVector& ell);

/// <x choose ell> at x = q^b: prod_{1<=i<=ell} (x q^(1-i) - 1) / (q^i - 1).
RatFunc angle_binomial(unsigned ell, unsigned b);

/// Coefficients a(alpha, k, q) of A_Gamma(alpha, q) in the basis
/// prod_ij [g_ij choose k_ij]_q, for k <= box. Zero coefficients are omitted.
struct MahlerTable {
  std::size_t n = 0;
  DimVector alpha;
  EdgeVector box;
  std::map<EdgeVector, QPoly> coeffs;

  QPoly coeff(const EdgeVector& k) const;
  /// sum_k a(alpha, k, q) prod_ij [g_ij choose k_ij]_q.
  QPoly reconstruct(const EdgeVector& g) const;
  /// k -> a(alpha, k, 1), the coefficients of A_Gamma(alpha, 1) in the basis
  /// prod_ij C(g_ij, k_ij). Zero values omitted.
  std::map<EdgeVector, Rational> at_one() const;
};

/// Componentwise bound beyond which every a(alpha, k, q) vanishes: alpha_i alpha_j
/// for i < j and alpha_i^2 on the diagonal.
EdgeVector mahler_support_bound(std::size_t n, const DimVector& alpha);

/// |alpha| + 2 in every entry, capped by mahler_support_bound.
EdgeVector mahler_default_box(std::size_t n, const DimVector& alpha);

/// Extraction over `box` from g -> kac_polynomial(Quiver(n, g), alpha). The
/// reconstruction is checked on every grid point of the box and at box + t,
/// t = 1, 2, 3. With `extend`, a failed check doubles the box (capped by the
/// support bound) and retries; otherwise, or once the bound is reached,
/// throws InvariantError.
MahlerTable mahler_table(std::size_t n, const DimVector& alpha, const EdgeVector& box, bool extend = true,
                         unsigned threads = 1);

struct CoefficientDerivativeCheck {
  EdgeVector k;
  /// |k| = |alpha|, outside the strict hypothesis |k| > |alpha|.
  bool boundary = false;
  unsigned required_order = 0;
  /// Vanishing order of a(alpha, k, q) at q = 1; empty when a = 0.
  std::optional<unsigned> actual_order;
  Rational expected;
  Rational actual;
  bool passed = false;
};

/// Checks that (q-1)^(|k|-|alpha|+1) divides a(alpha, k, q) and that the quotient
/// at q = 1 equals (k!/alpha!) sum_{p in S_k} c_coefficient(alpha, k, p) G_p^alpha.
/// Throws ArgumentError when |k| < |alpha| and InvariantError, quoting the actual
/// order, when divisibility fails.
CoefficientDerivativeCheck check_coefficient_derivative(std::size_t n, const DimVector& alpha, const EdgeVector& k);

}  // namespace kac
