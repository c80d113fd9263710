#include "kac/verify.hpp"

#include <array>
#include <functional>

#include "kac/errors.hpp"
#include "kac/graph_counts.hpp"
#include "kac/hua.hpp"
#include "kac/leading.hpp"
#include "kac/mahler.hpp"
#include "kac/qcomb.hpp"

namespace kac {

namespace {

// A_{S_g}(alpha, 1) for alpha, g = 1..6.
constexpr std::array<std::array<long, 6>, 6> kLoopValuesAtOne{{
    {1, 1, 1, 1, 1, 1},
    {1, 2, 3, 4, 5, 6},
    {1, 6, 15, 28, 45, 66},
    {1, 22, 95, 252, 525, 946},
    {1, 95, 710, 2674, 7215, 15961},
    {1, 449, 5856, 31374, 109707, 298023},
}};

// Coefficients of C(g, 1), C(g, 2), ... in A_{S_g}(alpha, 1), alpha = 2..6.
const std::vector<std::vector<long>> kLoopBinomialRows{
    {1}, {1, 4}, {1, 20, 32}, {1, 93, 428, 400}, {1, 447, 4512, 10640, 6912},
};

std::string str(const Rational& r) { return r.get_str(); }
std::string str(const Integer& r) { return r.get_str(); }

std::string str(const std::map<EdgeVector, Rational>& m) {
  std::string s;
  for (const auto& [k, v] : m) s += (s.empty() ? "" : " ") + k.to_string() + ":" + v.get_str();
  return s.empty() ? "0" : s;
}

std::string loop_label(unsigned alpha, unsigned g) {
  return "alpha=" + std::to_string(alpha) + " g=" + std::to_string(g);
}

Integer pow_int(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

std::vector<DimVector> two_vertex_dims(unsigned max_total) {
  std::vector<DimVector> out;
  for (unsigned t = 1; t <= max_total; ++t)
    for (unsigned a = 0; a <= t; ++a) out.push_back(DimVector{a, t - a});
  return out;
}

void suite_tables(bool full, unsigned threads, RunReport& r) {
  const unsigned a1 = full ? 6 : 3, g1 = full ? 4 : 3;
  for (unsigned a = 1; a <= a1; ++a)
    for (unsigned g = 1; g <= g1; ++g) {
      const QPoly p = kac_polynomial(Quiver::loops(g), DimVector{a});
      const std::string name = "loop polynomial " + loop_label(a, g);
      if (a <= 2 || g == 1) {
        // q, q^(4g-3) + ... + q^(2g-1) for alpha = 2, and q^g for alpha = 1.
        QPoly expected;
        if (g == 1) expected = QPoly::monomial(1, 1);
        else if (a == 1) expected = QPoly::monomial(1, g);
        else
          for (unsigned e = 2 * g - 1; e <= 4 * g - 3; e += 2) expected += QPoly::monomial(1, e);
        r.check(name, p == expected, expected.to_string(), p.to_string());
      } else {
        const long d = kac_degree(Quiver::loops(g), DimVector{a});
        const bool ok = p.degree() == d && p.coeff(d) == 1 && p.coeff(d - 1) == 0 && p.coeff(d - 2) == 1 &&
                        p.coeff(d - 3) == 1;
        const std::string lead = "q^" + std::to_string(d) + " + q^" + std::to_string(d - 2) + " + q^" +
                                 std::to_string(d - 3) + " + ...";
        r.check(name, ok, lead, p.to_string());
      }
    }

  const unsigned a2 = full ? 6 : 4, g2 = full ? 6 : 4;
  for (unsigned a = 1; a <= a2; ++a)
    for (unsigned g = 1; g <= g2; ++g) {
      const Rational v = kac_derivative_at_1(Quiver::loops(g), DimVector{a}, 0);
      const Rational expected(static_cast<long>(kLoopValuesAtOne[a - 1][g - 1]));
      r.check("loop value at 1 " + loop_label(a, g), v == expected, str(expected), str(v));
    }

  const unsigned a3 = full ? 6 : 4;
  for (unsigned a = 1; a <= a3; ++a) {
    const auto fit = fit_polynomial_in_g(1, DimVector{a}, 0, a - 1, threads).binomial_basis();
    std::map<EdgeVector, Rational> expected;
    if (a == 1) expected.emplace(EdgeVector(1, {0}), 1);
    else
      for (std::size_t k = 0; k < kLoopBinomialRows[a - 2].size(); ++k)
        expected.emplace(EdgeVector(1, {static_cast<unsigned>(k + 1)}), kLoopBinomialRows[a - 2][k]);
    r.check("loop binomial basis alpha=" + std::to_string(a), fit == expected, str(expected), str(fit));
  }
}

void suite_graphs(bool full, RunReport& r) {
  const unsigned max_n = full ? 3 : 2, max_size = full ? 5 : 4;
  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<unsigned> dims(n, 0);
    // every ell in {0..cap}^n with 1 <= |ell| <= cap
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        DimVector ell(dims);
        if (ell.total() == 0 || ell.total() > max_size) return;
        const unsigned budget = ell.total() + 2;
        const bool ok = connected_counts(ell, budget) == connected_counts_bruteforce(ell, budget);
        r.check("graphs series=bruteforce ell=" + ell.to_string() + " budget=" + std::to_string(budget), ok);
        return;
      }
      for (unsigned v = 0; v <= max_size; ++v) {
        dims[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }

  const unsigned cayley_max = full ? 7 : 5;
  for (unsigned a = 1; a <= cayley_max; ++a) {
    const Integer g = connected_counts(DimVector{a}, a - 1).count(EdgeVector(1, {a - 1}));
    const Integer expected = a == 1 ? Integer(1) : pow_int(a, a - 2);
    r.check("graphs cayley alpha=" + std::to_string(a), g == expected, str(expected), str(g));
  }

  for (const DimVector& ell : full ? two_vertex_dims(5) : two_vertex_dims(3)) {
    if (ell.total() < 2) continue;
    const auto table = connected_counts(ell, ell.total() - 2);
    r.check("graphs vanishing below |ell|-1 ell=" + ell.to_string(), table.counts.empty());
  }

  const unsigned max_bound = full ? 6 : 4;
  for (unsigned n = 1; n <= 2; ++n)
    for (const DimVector& bound : n == 1 ? std::vector<DimVector>{DimVector{max_bound}} : two_vertex_dims(max_bound)) {
      if (bound.total() != max_bound) continue;
      ClassFunction constant, connected;
      std::vector<unsigned> beta(n, 0);
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == n) {
          const DimVector cls(beta);
          if (cls.is_zero()) return;
          constant[beta] = Rational(3, 2);
          Integer total = 0;
          for (const auto& [k, c] : connected_counts(cls, cls.total() * cls.total()).counts) total += c;
          connected[beta] = Rational(total);
          return;
        }
        for (unsigned v = 0; v <= bound[i]; ++v) {
          beta[i] = v;
          fill(i + 1);
        }
      };
      fill(0);
      r.check("exponential formula constant bound=" + bound.to_string(), exponential_formula_check(constant, bound));
      r.check("exponential formula connected bound=" + bound.to_string(), exponential_formula_check(connected, bound));
    }
}

void suite_qbinom(bool full, RunReport& r) {
  const unsigned kt = full ? 5 : 3;
  for (unsigned k = 0; k <= kt; ++k)
    for (unsigned t = 0; t <= kt; ++t) {
      const BPoly p = qbinom_derivative_poly(k, t);
      Rational expected(factorial(t) * stirling2(k + t, k), factorial(k + t));
      expected.canonicalize();
      const std::string name = "qbinom derivative k=" + std::to_string(k) + " t=" + std::to_string(t);
      if (expected == 0) {
        // k = 0, t > 0: [b choose 0]_q = 1, so P vanishes identically.
        r.check(name + " vanishes", p.degree() < 0, "0", p.to_string());
        continue;
      }
      r.check(name + " degree", p.degree() == static_cast<long>(k + t), std::to_string(k + t),
              std::to_string(p.degree()));
      r.check(name + " leading", p.degree() >= 0 && p.lead() == expected, str(expected),
              p.degree() >= 0 ? str(p.lead()) : "0");
    }
  const unsigned im = full ? 4 : 2;
  for (unsigned i = 1; i <= im; ++i)
    for (unsigned m = 0; m <= im; ++m) {
      const BPoly p = ratio_derivative_poly(i, m);
      const Rational expected(1, static_cast<long>(i * (m + 1)));
      const std::string name = "ratio derivative i=" + std::to_string(i) + " m=" + std::to_string(m);
      r.check(name + " degree", p.degree() == static_cast<long>(m + 1), std::to_string(m + 1),
              std::to_string(p.degree()));
      r.check(name + " leading", p.degree() >= 0 && p.lead() == expected, str(expected),
              p.degree() >= 0 ? str(p.lead()) : "0");
    }
  // (e^x - 1)^k / k! against S(l, k) / l!, through x^10.
  constexpr unsigned kOrder = 10;
  std::vector<Rational> base(kOrder + 1);
  for (unsigned l = 1; l <= kOrder; ++l) base[l] = Rational(Integer(1), factorial(l));
  std::vector<Rational> power(kOrder + 1);
  power[0] = 1;
  for (unsigned k = 1; k <= 5; ++k) {
    std::vector<Rational> next(kOrder + 1);
    for (unsigned a = 0; a <= kOrder; ++a)
      for (unsigned b = 1; a + b <= kOrder; ++b) next[a + b] += power[a] * base[b];
    power = next;
    bool ok = true;
    for (unsigned l = 0; l <= kOrder; ++l) {
      Rational lhs = power[l] / Rational(factorial(k));
      Rational rhs(stirling2(l, k), factorial(l));
      rhs.canonicalize();
      ok = ok && lhs == rhs;
    }
    r.check("stirling egf k=" + std::to_string(k), ok);
  }
}

void suite_mahler(bool full, unsigned threads, RunReport& r) {
  const unsigned amax = full ? 5 : 3;
  for (unsigned a = 1; a <= amax; ++a) {
    const DimVector alpha{a};
    const MahlerTable t = mahler_table(1, alpha, mahler_default_box(1, alpha), true, threads);
    bool integral = true;
    for (const auto& [k, c] : t.coeffs) integral = integral && c.has_integer_coefficients();
    r.check("mahler integrality alpha=" + std::to_string(a), integral);
    for (unsigned g = 0; g <= 8; ++g) {
      const QPoly expected = kac_polynomial(Quiver::loops(g), alpha);
      const QPoly got = t.reconstruct(EdgeVector(1, {g}));
      std::string name = "mahler reconstruction " + loop_label(a, g);
      if (g > t.box[0]) name += " (outside extraction box)";
      r.check(name, got == expected, expected.to_string(), got.to_string());
    }
    bool vanish = true;
    for (const auto& [k, v] : t.at_one()) vanish = vanish && k.total() < a;
    r.check("mahler a(alpha,k,1) = 0 for |k| >= |alpha|, alpha=" + std::to_string(a), vanish);
  }
  for (unsigned l = 0; l <= 4; ++l)
    for (unsigned b = 0; b <= 6; ++b)
      r.check("angle bracket l=" + std::to_string(l) + " b=" + std::to_string(b),
              angle_binomial(l, b) == RatFunc(qbinom(b, l)));
  for (unsigned a = 2; a <= 3; ++a)
    for (unsigned k = a; k <= a + 2; ++k) {
      const auto c = check_coefficient_derivative(1, DimVector{a}, EdgeVector(1, {k}));
      std::string name = "coefficient derivative alpha=" + std::to_string(a) + " k=" + std::to_string(k);
      if (c.boundary) name += " [boundary |k|=|alpha|]";
      r.check(name, c.passed, str(c.expected), str(c.actual));
    }
}

bool compare_leading(std::size_t n, const DimVector& alpha, unsigned s, const GPolynomial& fit, RunReport& r) {
  const auto lead = leading_component(n, alpha, s).terms;
  const auto top = fit.top_homogeneous();
  const bool ok = lead == top && fit.total_degree() == static_cast<long>(s + alpha.total() - 1);
  r.check("leading component n=" + std::to_string(n) + " alpha=" + alpha.to_string() + " s=" + std::to_string(s) +
              " vs fit",
          ok, str(lead), str(top));
  return ok;
}

void suite_theorems(bool full, unsigned threads, RunReport& r) {
  const unsigned amax = full ? 6 : 4;
  for (unsigned a = 1; a <= amax; ++a) {
    const DimVector alpha{a};
    Rational expected(pow_int(2, a - 1) * (a >= 2 ? pow_int(a, a - 2) : Integer(1)), factorial(a));
    if (a == 1) expected = 1;
    expected.canonicalize();
    const auto at_one = leading_component_at_one(1, alpha).terms;
    const Rational got = at_one.empty() ? Rational(0) : at_one.begin()->second;
    r.check("leading coefficient alpha=" + std::to_string(a) + " equals 2^(a-1) a^(a-2)/a!",
            at_one.size() == 1 && got == expected, str(expected), str(got));
    compare_leading(1, alpha, 0, fit_polynomial_in_g(1, alpha, 0, a - 1, threads), r);
  }
  for (const DimVector& alpha : two_vertex_dims(full ? 4 : 3))
    compare_leading(2, alpha, 0, fit_polynomial_in_g(2, alpha, 0, alpha.total() - 1, threads), r);

  const unsigned a7 = full ? 4 : 3;
  for (unsigned a = 1; a <= a7; ++a) {
    const DimVector alpha{a};
    const auto fits = fit_polynomials_in_g(1, alpha, {1, 2}, a + 1, threads);
    compare_leading(1, alpha, 1, fits[0], r);
    compare_leading(1, alpha, 2, fits[1], r);
  }
  for (const DimVector& alpha : two_vertex_dims(full ? 3 : 2))
    compare_leading(2, alpha, 1, fit_polynomial_in_g(2, alpha, 1, alpha.total(), threads), r);
}

}  // namespace

VerifySuite parse_verify_suite(const std::string& name) {
  if (name == "tables") return VerifySuite::kTables;
  if (name == "graphs") return VerifySuite::kGraphs;
  if (name == "qbinom") return VerifySuite::kQbinom;
  if (name == "mahler") return VerifySuite::kMahler;
  if (name == "theorems") return VerifySuite::kTheorems;
  if (name == "all") return VerifySuite::kAll;
  throw ArgumentError("unknown suite '" + name + "'");
}

VerifySize parse_verify_size(const std::string& name) {
  if (name == "quick") return VerifySize::kQuick;
  if (name == "full") return VerifySize::kFull;
  throw ArgumentError("unknown size '" + name + "' (expected quick or full)");
}

void run_verify(VerifySuite suite, VerifySize size, unsigned threads, RunReport& report) {
  const bool full = size == VerifySize::kFull;
  const bool all = suite == VerifySuite::kAll;
  if (all || suite == VerifySuite::kTables) suite_tables(full, threads, report);
  if (all || suite == VerifySuite::kGraphs) suite_graphs(full, report);
  if (all || suite == VerifySuite::kQbinom) suite_qbinom(full, report);
  if (all || suite == VerifySuite::kMahler) suite_mahler(full, threads, report);
  if (all || suite == VerifySuite::kTheorems) suite_theorems(full, threads, report);
}

}  // namespace kac
