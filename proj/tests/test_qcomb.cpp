#include <doctest.h>

#include "kac/errors.hpp"
#include "kac/qcomb.hpp"

using namespace kac;

namespace {

// S(n, k) = (1/k!) sum_j (-1)^j C(k, j) (k - j)^n.
Integer stirling_explicit(unsigned n, unsigned k) {
  Integer s = 0;
  for (unsigned j = 0; j <= k; ++j) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), k - j, n);
    s += (j % 2 ? -1 : 1) * binomial(k, j) * p;
  }
  return s / factorial(k);
}

// prod_{i<k} (1 - q^(b-i)) / (1 - q^(i+1)).
QPoly qbinom_product(unsigned b, unsigned k) {
  if (k > b) return QPoly();
  QPoly num{1}, den{1};
  for (unsigned i = 0; i < k; ++i) {
    num *= QPoly{1} - QPoly::monomial(1, b - i);
    den *= QPoly{1} - QPoly::monomial(1, i + 1);
  }
  return exact_div(num, den);
}

}  // namespace

TEST_CASE("Stirling numbers of the second kind") {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) CHECK(stirling2(n, k) == stirling_explicit(n, k));
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(10, 3) == 9330);
}

TEST_CASE("Gaussian binomials") {
  CHECK(qbinom(4, 2) == QPoly{1, 1, 2, 1, 1});
  CHECK(qbinom(2, 5).is_zero());
  for (unsigned b = 0; b <= 10; ++b)
    for (unsigned k = 0; k <= b; ++k) {
      const QPoly p = qbinom(b, k);
      CHECK(p == qbinom_product(b, k));
      CHECK(p == qbinom(b, b - k));
      CHECK(p(Rational(1)) == Rational(binomial(b, k)));
      CHECK(p.degree() == static_cast<long>(k * (b - k)));
      if (b > 0 && k > 0)
        CHECK(p == qbinom(b - 1, k - 1) + qbinom(b - 1, k).shifted(k));
    }
}

TEST_CASE("consecutive-node interpolation") {
  // 2b^3 - b + 7 sampled at b = -2..1.
  const QPoly target{7, -1, 0, 2};
  std::vector<Rational> v;
  for (long b = -2; b <= 1; ++b) v.push_back(target(Rational(b)));
  CHECK(interpolate_consecutive(-2, v).coefficients() == target);
  CHECK(interpolate_consecutive(0, std::vector<Rational>{}).degree() == -1);
}

TEST_CASE("derivatives of q-binomials at q = 1 are polynomials in b") {
  for (unsigned k = 0; k <= 5; ++k)
    for (unsigned t = 0; t <= 5; ++t) {
      const BPoly p = qbinom_derivative_poly(k, t);
      for (unsigned b = 0; b <= k + t + 6; ++b) CHECK(p(Rational(b)) == qpoly_taylor_at_1(qbinom(b, k), t));
      Rational lead(factorial(t) * stirling2(k + t, k), factorial(k + t));
      lead.canonicalize();
      if (lead == 0) {
        CHECK(p.degree() == -1);
      } else {
        CHECK(p.degree() == static_cast<long>(k + t));
        CHECK(p.lead() == lead);
      }
    }
  // C(b, 2) times the mean exponent b - 2.
  CHECK(qbinom_derivative_poly(2, 1).to_string() == "1/2*b^3 - 3/2*b^2 + b");
}

TEST_CASE("derivatives of geometric-sum ratios") {
  for (unsigned i = 1; i <= 4; ++i)
    for (unsigned m = 0; m <= 4; ++m) {
      const BPoly p = ratio_derivative_poly(i, m);
      CHECK(p.degree() == static_cast<long>(m + 1));
      CHECK(p.lead() == Rational(1, static_cast<long>(i * (m + 1))));
      for (unsigned b = i - 1; b <= i + m + 6; ++b) CHECK(p(Rational(b)) == ratio_derivative_value(i, m, b));
    }
  // m = 0: (b - i + 1) / i.
  CHECK(ratio_derivative_value(3, 0, 8) == 2);
  CHECK_THROWS_AS(ratio_derivative_value(0, 1, 2), ArgumentError);
  CHECK_THROWS_AS(ratio_derivative_value(3, 1, 1), ArgumentError);
}
