#include <doctest.h>

#include "kac/errors.hpp"
#include "kac/hua.hpp"
#include "kac/leading.hpp"

using namespace kac;

namespace {

Rational loop_leading(unsigned a) {
  Integer p, t;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, a - 1);
  mpz_ui_pow_ui(t.get_mpz_t(), a, a >= 2 ? a - 2 : 0);
  Rational r(p * t, factorial(a));
  r.canonicalize();
  return a == 1 ? Rational(1) : r;
}

std::vector<DimVector> two_vertex(unsigned max_total) {
  std::vector<DimVector> out;
  for (unsigned t = 1; t <= max_total; ++t)
    for (unsigned a = 0; a <= t; ++a) out.push_back(DimVector{a, t - a});
  return out;
}

}  // namespace

TEST_CASE("S_k and c coefficients") {
  const EdgeVector k(2, {2, 1, 3});
  const auto s = s_k_set(k);
  CHECK(s.size() == 3 * 4);
  for (const auto& p : s) CHECK(p.at(0, 1) == 1);
  CHECK(c_coefficient({2}, EdgeVector(1, {2}), EdgeVector(1, {1})) == 5);
  // p_ii = 0 leaves C(alpha_i, k_ii).
  CHECK(c_coefficient({4}, EdgeVector(1, {3}), EdgeVector(1, {0})) == 4);
  CHECK(c_coefficient({2, 3}, EdgeVector(2, {1, 5, 2}), EdgeVector(2, {0, 5, 0})) == 2 * 3);
  CHECK_THROWS_AS(c_coefficient({2}, EdgeVector(1, {2}), EdgeVector(1, {3})), ArgumentError);
  CHECK_THROWS_AS(c_coefficient({1, 1}, EdgeVector(2, {0, 2, 0}), EdgeVector(2, {0, 1, 0})), ArgumentError);
}

TEST_CASE("g-polynomials in the binomial basis") {
  // 4 C(g, 2) + C(g, 1) = 2 g^2 - g.
  const GPolynomial p = GPolynomial::from_binomial_basis(1, {{EdgeVector(1, {2}), 4}, {EdgeVector(1, {1}), 1}});
  CHECK(p.to_string() == "2*g^2 - g");
  CHECK(p(EdgeVector(1, {3})) == 15);
  CHECK(p.binomial_basis() == std::map<EdgeVector, Rational>{{EdgeVector(1, {1}), 1}, {EdgeVector(1, {2}), 4}});
  const std::map<EdgeVector, Rational> coeffs{{EdgeVector(2, {1, 0, 2}), Rational(3, 2)},
                                              {EdgeVector(2, {0, 1, 0}), -2},
                                              {EdgeVector(2, {0, 0, 0}), 5}};
  const GPolynomial q = GPolynomial::from_binomial_basis(2, coeffs);
  CHECK(q.binomial_basis() == coeffs);
  CHECK(q.total_degree() == 3);
  CHECK(q.top_homogeneous() == std::map<EdgeVector, Rational>{{EdgeVector(2, {1, 0, 2}), Rational(3, 4)}});
  CHECK(GPolynomial::variable_names(2) == std::vector<std::string>{"g11", "g12", "g22"});
}

TEST_CASE("one vertex, s = 0: leading coefficient 2^(a-1) a^(a-2) / a!") {
  for (unsigned a = 1; a <= 6; ++a) {
    const auto lc = leading_component(1, {a}, 0);
    REQUIRE(lc.terms.size() == 1);
    CHECK(lc.terms.begin()->first == EdgeVector(1, {a - 1}));
    CHECK(lc.terms.begin()->second == loop_leading(a));
    CHECK(leading_component_at_one(1, {a}) == lc);
  }
  CHECK(leading_component(1, {5}, 0).terms.begin()->second == Rational(50, 3));
}

TEST_CASE("the s = 0 route agrees with the general formula") {
  for (const DimVector& alpha : two_vertex(4)) CHECK(leading_component_at_one(2, alpha) == leading_component(2, alpha, 0));
  CHECK(leading_component_at_one(3, {1, 1, 1}) == leading_component(3, {1, 1, 1}, 0));
}

TEST_CASE("fit oracle on a hand-derivable case") {
  // d/dq A_{S_g}(2, q) at 1 for g = 1..4: 1, 8, 21, 40.
  const long values[] = {1, 8, 21, 40};
  for (unsigned g = 1; g <= 4; ++g) CHECK(kac_derivative_at_1(Quiver::loops(g), {2}, 1) == values[g - 1]);
  const GPolynomial fit = fit_polynomial_in_g(1, {2}, 1, 3);
  CHECK(fit.to_string() == "3*g^2 - 2*g");
  CHECK(leading_component(1, {2}, 1).terms == fit.top_homogeneous());
  CHECK(fit.top_homogeneous().begin()->second == 3);
}

TEST_CASE("leading component matches the fit for s = 0, 1, 2") {
  for (unsigned a = 1; a <= 4; ++a) {
    const auto fits = fit_polynomials_in_g(1, {a}, {0, 1, 2}, a + 1);
    for (unsigned s = 0; s <= 2; ++s) {
      CHECK(fits[s].total_degree() == static_cast<long>(s + a - 1));
      CHECK(leading_component(1, {a}, s).terms == fits[s].top_homogeneous());
    }
  }
  for (const DimVector& alpha : two_vertex(3)) {
    const auto fits = fit_polynomials_in_g(2, alpha, {0, 1}, alpha.total(), 2);
    CHECK(leading_component(2, alpha, 0).terms == fits[0].top_homogeneous());
    CHECK(leading_component(2, alpha, 1).terms == fits[1].top_homogeneous());
  }
}

TEST_CASE("A(alpha, 1) has an integral binomial-basis expansion") {
  for (const DimVector& alpha : two_vertex(3))
    for (const auto& [k, c] : fit_polynomial_in_g(2, alpha, 0, alpha.total() - 1).binomial_basis())
      CHECK(is_integer(c));
}

TEST_CASE("fit reproduces the sampled values and is thread independent") {
  const DimVector alpha{1, 2};
  const GPolynomial one = fit_polynomial_in_g(2, alpha, 0, 3, 1);
  CHECK(fit_polynomial_in_g(2, alpha, 0, 3, 4) == one);
  for (const EdgeVector& g : {EdgeVector(2, {5, 1, 0}), EdgeVector(2, {0, 6, 2}), EdgeVector(2, {3, 3, 3})})
    CHECK(one(g) == kac_derivative_at_1(Quiver(2, g), alpha, 0));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(fit_polynomial_in_g(1, {3}, 1, 2), ArgumentError);
  CHECK_THROWS_AS(fit_polynomials_in_g(1, {2}, {0, 3}, 2), ArgumentError);
  CHECK_THROWS_AS(leading_component(1, {0}, 0), ArgumentError);
  CHECK_THROWS_AS(leading_component(2, {1}, 0), ArgumentError);
  const auto small = connected_counts({3}, 1);
  CHECK_THROWS_AS(leading_component(1, {3}, 0, small), ArgumentError);
}
