#include <doctest.h>

#include <random>

#include "kac/errors.hpp"
#include "kac/mpoly.hpp"
#include "kac/partition.hpp"
#include "kac/qpoly.hpp"
#include "kac/ratfunc.hpp"
#include "kac/trunc_series.hpp"

using namespace kac;

namespace {

QPoly random_qpoly(std::mt19937& rng, int max_degree, int range = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-range, range);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return QPoly(c);
}

RatFunc random_ratfunc(std::mt19937& rng) {
  QPoly den;
  while (den.is_zero()) den = random_qpoly(rng, 3);
  return RatFunc::normalize(random_qpoly(rng, 4), den);
}

// Euler's pentagonal recurrence.
std::vector<long> partition_numbers(unsigned n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m)
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(m)) break;
      const long sign = k % 2 ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= static_cast<long>(m)) p[m] += sign * p[m - g2];
    }
  return p;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("12") == 12);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("x"), ArgumentError);
  CHECK_THROWS_AS(parse_rational(""), ArgumentError);
}

TEST_CASE("qpoly basics") {
  const QPoly p{1, 0, 1};  // 1 + q^2
  CHECK(p.degree() == 2);
  CHECK(QPoly().degree() == -1);
  CHECK(p.to_string() == "q^2 + 1");
  CHECK((QPoly{0, -1} * Rational(1, 2)).to_string() == "-1/2*q");
  CHECK(p * QPoly{-1, 1} == QPoly{-1, 1, -1, 1});
  CHECK(QPoly::geometric(3) == QPoly{1, 1, 1});
  CHECK(p.compose_power(2) == QPoly{1, 0, 0, 0, 1});
  CHECK(p.taylor_shift_one() == QPoly{2, 2, 1});
  CHECK(p(Rational(2)) == 5);
  CHECK(pow(QPoly{1, 1}, 3) == QPoly{1, 3, 3, 1});
  CHECK(p.low_degree() == 0);
  CHECK(QPoly{0, 0, 3}.low_degree() == 2);
}

TEST_CASE("qpoly division, gcd and behaviour at q = 1") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const QPoly a = random_qpoly(rng, 6), b = random_qpoly(rng, 4);
    if (b.is_zero()) continue;
    const auto [quo, rem] = divmod(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());
    const QPoly g = gcd(a * b, b * QPoly{1, 1});
    CHECK(divmod(a * b, g).second.is_zero());
    CHECK(divmod(b * QPoly{1, 1}, g).second.is_zero());
    CHECK(divmod(g, b).second.is_zero());
    // Repeated differentiation against the falling-factorial formula.
    QPoly d = a;
    for (unsigned t = 0; t <= 4; ++t) {
      CHECK(qpoly_taylor_at_1(a, t) == d(Rational(1)));
      d = d.derivative();
    }
  }
  CHECK_THROWS_AS(exact_div(QPoly{1, 0, 1}, QPoly{-1, 1}), InvariantError);
  CHECK(exact_div(QPoly{-1, 0, 1}, QPoly{-1, 1}) == QPoly{1, 1});
  CHECK(vanishing_order_at_1(pow(QPoly{-1, 1}, 3) * QPoly{2, 1}) == 3);
  CHECK(vanishing_order_at_1(QPoly{5}) == 0);
  CHECK_THROWS_AS(vanishing_order_at_1(QPoly()), ArgumentError);
  CHECK_THROWS_AS(divmod(QPoly{1}, QPoly()), ArgumentError);
}

TEST_CASE("ratfunc canonical form") {
  const RatFunc f = RatFunc::normalize(QPoly{-1, 0, 1}, QPoly{-1, 1});
  CHECK(f.is_polynomial());
  CHECK(*f.as_polynomial() == QPoly{1, 1});
  const RatFunc g = RatFunc::normalize(QPoly{2}, QPoly{-4, -2});
  CHECK(g.den() == QPoly{2, 1});
  CHECK(g.num() == QPoly{-1});
  CHECK(RatFunc::normalize(QPoly::constant(Rational(1, 2)), QPoly::constant(Rational(1, 3))) == RatFunc(Rational(3, 2)));
  CHECK_THROWS_AS(RatFunc::normalize(QPoly{1}, QPoly()), ArgumentError);
  CHECK(RatFunc::q_power(-2) * RatFunc::q_power(3) == RatFunc::q_power(1));
  CHECK_THROWS_AS(RatFunc::normalize(QPoly{1}, QPoly{-1, 1})(Rational(1)), ArgumentError);
  CHECK(RatFunc::normalize(QPoly{1}, QPoly{1, 1}).substitute_power(2) == RatFunc::normalize(QPoly{1}, QPoly{1, 0, 1}));
}

TEST_CASE("ratfunc field axioms on random elements") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Quotient rule for the derivative.
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    // Canonical pairs are coprime with a positive leading denominator.
    CHECK(gcd(a.num(), a.den()).degree() <= 0);
    CHECK(a.den().lead() > 0);
  }
}

TEST_CASE("pole cancellation at q = 1") {
  const RatFunc f = RatFunc::normalize(QPoly{3}, pow(QPoly{-1, 1}, 2));
  CHECK(ratfunc_limit_with_pole_cancellation(f, 2) == 3);
  CHECK(ratfunc_limit_with_pole_cancellation(f, 3) == 0);
  CHECK_THROWS_AS(ratfunc_limit_with_pole_cancellation(f, 1), ArgumentError);
}

TEST_CASE("mpoly") {
  const MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  const MPoly p = (x + y) * (x + y);
  CHECK(p.coeff({1, 1}) == 2);
  CHECK(p.total_degree() == 2);
  CHECK(MPoly(2).total_degree() == -1);
  CHECK(p.homogeneous_part(2) == p);
  CHECK(p.to_string(std::vector<std::string>{"a", "b"}) == "a^2 + 2*a*b + b^2");
  const std::vector<Rational> pt{2, 3};
  CHECK(p.evaluate(pt) == 25);
  const MPoly one = MPoly::constant(2, 1);
  const MPoly a = one + x + y * y, b = one - x * y + x * x;
  for (unsigned cap = 0; cap <= 4; ++cap) CHECK(MPoly::mul_truncated(a, b, cap) == (a * b).truncated(cap));
  CHECK((p - p).is_zero());
}

TEST_CASE("partitions") {
  const auto counts = partition_numbers(20);
  for (unsigned m = 0; m <= 20; ++m) CHECK(partitions_of(m).size() == static_cast<std::size_t>(counts[m]));
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(partitions_of(4).back() == Partition({1, 1, 1, 1}));
  for (const auto& lambda : partitions_of(9)) {
    const Partition t(lambda.transpose());
    CHECK(Partition(t.transpose()) == lambda);
    CHECK(t.size() == lambda.size());
    unsigned weighted = 0;
    const auto mult = lambda.multiplicities();
    for (std::size_t i = 1; i < mult.size(); ++i) weighted += i * mult[i];
    CHECK(weighted == lambda.size());
    CHECK(pairing(lambda, lambda) == [&] {
      unsigned s = 0;
      for (unsigned x : lambda.transpose()) s += x * x;
      return s;
    }());
  }
  CHECK(partitions_up_to(5).size() == 1 + 1 + 2 + 3 + 5 + 7);
  CHECK_THROWS_AS(Partition({1, 2}), ArgumentError);
  CHECK_THROWS_AS(Partition({2, 0}), ArgumentError);
}

TEST_CASE("truncated series log and exp") {
  // 1 + x + 2y + 3xy in the box (3, 2).
  TruncSeries<Rational> s({3, 2}, Rational(0), Rational(1));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::size_t i = 1; i < s.size(); ++i) s[i] = coef(rng);
  s[0] = 1;
  const auto l1 = series_log(s), l2 = series_log_recurrence(s);
  CHECK(l1 == l2);
  CHECK(l1[0] == 0);
  CHECK(series_exp(l1) == s);
  TruncSeries<Rational> bad = s;
  bad[0] = 2;
  CHECK_THROWS_AS(series_log(bad), ArgumentError);
}

TEST_CASE("truncated series of rational functions") {
  // 1 / (1 - qT) has log sum_m q^m T^m / m.
  TruncSeries<RatFunc> s({4}, RatFunc(0), RatFunc(1));
  for (unsigned m = 0; m <= 4; ++m) s[m] = RatFunc::q_power(m);
  const auto l = series_log_recurrence(s);
  for (unsigned m = 1; m <= 4; ++m) CHECK(l[m] == RatFunc::q_power(m) * Rational(1, m));
  CHECK(series_log(s) == l);
}
