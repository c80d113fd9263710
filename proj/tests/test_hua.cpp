#include <doctest.h>

#include "kac/errors.hpp"
#include "kac/hua.hpp"

using namespace kac;

namespace {

QPoly q_sum(std::initializer_list<unsigned> exps) {
  QPoly p;
  for (unsigned e : exps) p += QPoly::monomial(1, e);
  return p;
}

// Quiver with no edges between the chosen consecutive vertices of a path.
Quiver path(std::size_t n) {
  std::vector<unsigned> g(pair_count(n), 0);
  for (std::size_t i = 0; i + 1 < n; ++i) g[pair_index(n, i, i + 1)] = 1;
  return Quiver(n, g);
}

}  // namespace

TEST_CASE("loop quivers at small sizes") {
  CHECK(kac_polynomial(Quiver::loops(2), {2}) == q_sum({5, 3}));
  CHECK(kac_polynomial(Quiver::loops(4), {2}) == q_sum({13, 11, 9, 7}));
  CHECK(kac_polynomial(Quiver::loops(3), {2}) == q_sum({9, 7, 5}));
  for (unsigned g = 0; g <= 5; ++g) CHECK(kac_polynomial(Quiver::loops(g), {1}) == QPoly::monomial(1, g));
  // One loop: A(alpha) = q for every alpha.
  for (unsigned a = 1; a <= 7; ++a) CHECK(kac_polynomial(Quiver::loops(1), {a}) == QPoly::monomial(1, 1));
  // No loops: only the simple representation.
  CHECK(kac_polynomial(Quiver::loops(0), {1}) == QPoly{1});
  for (unsigned a = 2; a <= 5; ++a) CHECK(kac_polynomial(Quiver::loops(0), {a}).is_zero());
}

TEST_CASE("Kronecker quivers") {
  // Points of P^(g-1) over F_q.
  for (unsigned g = 1; g <= 5; ++g) CHECK(kac_polynomial(Quiver::kronecker(g), {1, 1}) == QPoly::geometric(g));
  // Affine case g = 2: imaginary roots (n, n) give q + 1, real roots give 1.
  for (unsigned m = 1; m <= 4; ++m) {
    CHECK(kac_polynomial(Quiver::kronecker(2), {m, m}) == QPoly{1, 1});
    CHECK(kac_polynomial(Quiver::kronecker(2), {m, m + 1}) == QPoly{1});
    CHECK(kac_polynomial(Quiver::kronecker(2), {m + 2, m}).is_zero());
  }
}

TEST_CASE("Dynkin type A: one indecomposable per positive root") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Quiver q = path(n);
    std::vector<unsigned> alpha(n);
    // all alpha in {0,1,2}^n
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) alpha[i] = static_cast<unsigned>(c % 3);
      std::size_t first = n, last = 0;
      bool ones = true;
      for (std::size_t i = 0; i < n; ++i)
        if (alpha[i]) {
          first = std::min(first, i);
          last = i;
        }
      for (std::size_t i = first; i <= last; ++i) ones = ones && alpha[i] == 1;
      const QPoly expected = ones ? QPoly{1} : QPoly();
      CHECK_MESSAGE(kac_polynomial(q, DimVector(alpha)) == expected, DimVector(alpha).to_string());
    }
  }
}

TEST_CASE("both logarithm routines agree") {
  const Quiver q(2, {1, 2, 0});
  for (const DimVector& alpha : {DimVector{1, 2}, DimVector{2, 2}, DimVector{3, 1}}) {
    CHECK(hua_log_series(q, alpha, LogMethod::kRecurrence) == hua_log_series(q, alpha, LogMethod::kPowerSum));
    CHECK(kac_polynomial(q, alpha, LogMethod::kRecurrence) == kac_polynomial(q, alpha, LogMethod::kPowerSum));
  }
  CHECK(kac_polynomial(Quiver::loops(3), {4}, LogMethod::kPowerSum) ==
        kac_polynomial(Quiver::loops(3), {4}, LogMethod::kRecurrence));
}

TEST_CASE("properties of A") {
  const Quiver q(3, {1, 1, 0, 0, 2, 0});
  const std::vector<std::size_t> perm{2, 0, 1};
  for (const DimVector& alpha : {DimVector{1, 1, 1}, DimVector{2, 1, 1}, DimVector{1, 2, 0}}) {
    const QPoly a = kac_polynomial(q, alpha);
    CHECK(a.has_integer_coefficients());
    if (!a.is_zero()) {
      CHECK(a.degree() == kac_degree(q, alpha));
      CHECK(a.lead() == 1);
    }
    // Relabelling vertices permutes alpha the same way.
    std::vector<unsigned> moved(3);
    for (std::size_t i = 0; i < 3; ++i) moved[i] = alpha[perm[i]];
    CHECK(kac_polynomial(q.permuted(perm), DimVector(moved)) == a);
  }
  // Nonnegative coefficients.
  for (const auto& c : kac_polynomial(Quiver::loops(2), {4}).coefficients()) CHECK(c >= 0);
}

TEST_CASE("values and derivatives at q = 1") {
  CHECK(kac_derivative_at_1(Quiver::loops(3), {4}, 0) == 95);
  CHECK(kac_derivative_at_1(Quiver::loops(5), {5}, 0) == 7215);
  // d/dq (q^5 + q^3) = 5 + 3.
  CHECK(kac_derivative_at_1(Quiver::loops(2), {2}, 1) == 8);
  CHECK(kac_derivative_at_1(Quiver::loops(2), {2}, 2) == 20 + 6);
}

TEST_CASE("Hua ingredients") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(7) == -1);
  // lambda = (1): 1 / (q b_(1)(q^-1)) = 1 / (q - 1).
  CHECK(b_lambda_inverse_factor(Partition({1})) == RatFunc::normalize(QPoly{1}, QPoly{-1, 1}));
  // alpha = 3: A = (q-1)/3 (H(3, q) - H(1, q^3)).
  const Quiver q = Quiver::loops(2);
  const RatFunc combined = (hua_H(q, {3}) - hua_H(q, {1}).substitute_power(3)) * RatFunc(QPoly{-1, 1}) * Rational(1, 3);
  CHECK(combined == RatFunc(kac_polynomial(q, {3})));
  const auto p = hua_P_coefficients(q, {2});
  CHECK(p[0] == RatFunc(1));
  CHECK_THROWS_AS(kac_polynomial(q, {1, 1}), ArgumentError);
}
