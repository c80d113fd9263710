#pragma once

#include "kac/partition.hpp"
#include "kac/qpoly.hpp"
#include "kac/quiver.hpp"
#include "kac/ratfunc.hpp"
#include "kac/trunc_series.hpp"

namespace kac {

/// Which of the two exact logarithm routines feeds Hua's H. Both produce
/// identical coefficients.
enum class LogMethod { kRecurrence, kPowerSum };

/// 1 / (q^<lambda,lambda> b_lambda(q^-1)).
RatFunc b_lambda_inverse_factor(const Partition& lambda);

/// Coefficients of T^beta, beta <= alpha, in Hua's generating function
/// P_Gamma(T, q). The T^0 coefficient is 1.
TruncSeries<RatFunc> hua_P_coefficients(const Quiver& quiver, const DimVector& alpha);

/// log P_Gamma(T, q) truncated to the box beta <= alpha.
TruncSeries<RatFunc> hua_log_series(const Quiver& quiver, const DimVector& alpha,
                                    LogMethod method = LogMethod::kRecurrence);

/// H_Gamma(alpha, q) = gcd(alpha) * [T^alpha] log P_Gamma.
RatFunc hua_H(const Quiver& quiver, const DimVector& alpha);

/// Mobius function.
int mobius(unsigned n);

/// Kac polynomial A_Gamma(alpha, q) by Hua's formula. Throws InvariantError if
/// the result is not an integer polynomial.
QPoly kac_polynomial(const Quiver& quiver, const DimVector& alpha, LogMethod method = LogMethod::kRecurrence);

/// d^s/dq^s A_Gamma(alpha, q) at q = 1.
Rational kac_derivative_at_1(const Quiver& quiver, const DimVector& alpha, unsigned s);

/// 1 - sum alpha_i^2 + sum_{i<j} g_ij alpha_i alpha_j + sum_i g_ii alpha_i^2, the
/// degree of A_Gamma(alpha, q) whenever it is nonzero.
long kac_degree(const Quiver& quiver, const DimVector& alpha);

}  // namespace kac
