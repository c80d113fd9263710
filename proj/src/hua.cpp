#include "kac/hua.hpp"

#include <algorithm>
#include <numeric>

#include "kac/errors.hpp"

namespace kac {

namespace {

void check_inputs(const Quiver& quiver, const DimVector& alpha) {
  if (alpha.size() != quiver.vertices())
    throw ArgumentError("dimension vector " + alpha.to_string() + " does not match a quiver on " +
                        std::to_string(quiver.vertices()) + " vertices");
  if (alpha.is_zero()) throw ArgumentError("dimension vector must be nonzero");
}

// 1/(q^<l,l> b_l(q^-1)) = q^shift / prod_i prod_{j<=n_i} (q^j - 1).
struct BFactor {
  Partition lambda;
  std::vector<unsigned> transpose;
  long shift = 0;
  QPoly den;
};

BFactor make_bfactor(const Partition& lambda) {
  BFactor f{lambda, lambda.transpose(), 0, QPoly::constant(1)};
  long tri = 0;
  const auto mult = lambda.multiplicities();
  for (std::size_t i = 1; i < mult.size(); ++i)
    for (unsigned j = 1; j <= mult[i]; ++j) {
      f.den *= QPoly::monomial(1, j) - QPoly::constant(1);
      tri += j;
    }
  f.shift = tri - static_cast<long>(pairing(lambda, lambda));
  return f;
}

unsigned pair_transposes(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  unsigned s = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) s += a[i] * b[i];
  return s;
}

// prod_{j=1}^{m} (q^j - 1), which every b-factor denominator of a partition of m divides.
QPoly falling_q_product(unsigned m) {
  QPoly p = QPoly::constant(1);
  for (unsigned j = 1; j <= m; ++j) p *= QPoly::monomial(1, j) - QPoly::constant(1);
  return p;
}

}  // namespace

RatFunc b_lambda_inverse_factor(const Partition& lambda) {
  BFactor f = make_bfactor(lambda);
  if (f.shift >= 0) return RatFunc::normalize(QPoly::monomial(1, static_cast<std::size_t>(f.shift)), f.den);
  return RatFunc::normalize(QPoly::constant(1), f.den.shifted(static_cast<std::size_t>(-f.shift)));
}

TruncSeries<RatFunc> hua_P_coefficients(const Quiver& quiver, const DimVector& alpha) {
  check_inputs(quiver, alpha);
  const std::size_t n = quiver.vertices();

  // factors[i][m] = b-factor data of the partitions of m, for vertex i.
  std::vector<std::vector<std::vector<BFactor>>> factors(n);
  for (std::size_t i = 0; i < n; ++i) {
    factors[i].resize(alpha[i] + 1);
    for (unsigned m = 0; m <= alpha[i]; ++m)
      for (const auto& lambda : partitions_of(m)) factors[i][m].push_back(make_bfactor(lambda));
  }
  std::vector<QPoly> falling;
  const unsigned max_alpha = *std::max_element(alpha.entries().begin(), alpha.entries().end());
  for (unsigned m = 0; m <= max_alpha; ++m) falling.push_back(falling_q_product(m));

  TruncSeries<RatFunc> series(alpha.entries(), RatFunc(0), RatFunc(1));
  for (std::size_t cell = 0; cell < series.size(); ++cell) {
    const auto& beta = series.exponent(cell);
    QPoly common = QPoly::constant(1);
    for (std::size_t i = 0; i < n; ++i) common *= falling[beta[i]];

    // Exponent and cofactor common/den for every multipartition of shape beta.
    std::vector<std::pair<long, QPoly>> terms;
    std::vector<std::size_t> choice(n, 0);
    auto advance = [&] {
      for (std::size_t k = n; k-- > 0;) {
        if (++choice[k] < factors[k][beta[k]].size()) return true;
        choice[k] = 0;
      }
      return false;
    };
    do {
      long e = 0;
      QPoly den = QPoly::constant(1);
      for (std::size_t i = 0; i < n; ++i) {
        const BFactor& fi = factors[i][beta[i]][choice[i]];
        e += fi.shift;
        den *= fi.den;
        for (std::size_t j = i; j < n; ++j) {
          const BFactor& fj = factors[j][beta[j]][choice[j]];
          e += static_cast<long>(quiver.edges(i, j)) * pair_transposes(fi.transpose, fj.transpose);
        }
      }
      terms.emplace_back(e, exact_div(common, den));
    } while (advance());

    long emin = 0;
    for (const auto& t : terms) emin = std::min(emin, t.first);
    QPoly num;
    for (const auto& [e, cof] : terms) num += cof.shifted(static_cast<std::size_t>(e - emin));
    series[cell] = RatFunc::normalize(num, common.shifted(static_cast<std::size_t>(-emin)));
  }
  return series;
}

TruncSeries<RatFunc> hua_log_series(const Quiver& quiver, const DimVector& alpha, LogMethod method) {
  auto p = hua_P_coefficients(quiver, alpha);
  return method == LogMethod::kPowerSum ? series_log(p) : series_log_recurrence(p);
}

RatFunc hua_H(const Quiver& quiver, const DimVector& alpha) {
  auto log = hua_log_series(quiver, alpha);
  return log.at(alpha.entries()) * Rational(alpha.gcd());
}

int mobius(unsigned n) {
  if (n == 0) throw ArgumentError("mobius(0) is undefined");
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

QPoly kac_polynomial(const Quiver& quiver, const DimVector& alpha, LogMethod method) {
  auto log = hua_log_series(quiver, alpha, method);
  const unsigned abar = alpha.gcd();
  RatFunc sum;
  for (unsigned d = 1; d <= abar; ++d) {
    if (abar % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    std::vector<unsigned> reduced(alpha.entries());
    for (auto& x : reduced) x /= d;
    // H(alpha/d, q) = gcd(alpha/d) * [T^(alpha/d)] log P.
    RatFunc h = log.at(reduced) * Rational(static_cast<long>(abar / d) * mu);
    sum += h.substitute_power(d);
  }
  sum *= RatFunc(QPoly{-1, 1});
  sum *= Rational(1, abar);
  auto poly = sum.as_polynomial();
  if (!poly || !poly->has_integer_coefficients())
    throw InvariantError("Hua's formula produced a non-integral Kac polynomial " + sum.to_string() +
                         " for alpha = " + alpha.to_string());
  return *poly;
}

Rational kac_derivative_at_1(const Quiver& quiver, const DimVector& alpha, unsigned s) {
  return qpoly_taylor_at_1(kac_polynomial(quiver, alpha), s);
}

long kac_degree(const Quiver& quiver, const DimVector& alpha) {
  check_inputs(quiver, alpha);
  long d = 1;
  const std::size_t n = quiver.vertices();
  for (std::size_t i = 0; i < n; ++i) {
    const long ai = alpha[i];
    d -= ai * ai;
    for (std::size_t j = i; j < n; ++j) d += static_cast<long>(quiver.edges(i, j)) * ai * alpha[j];
  }
  return d;
}

}  // namespace kac
