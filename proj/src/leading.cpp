#include "kac/leading.hpp"

#include <numeric>

#include "kac/errors.hpp"
#include "kac/hua.hpp"
#include "kac/parallel.hpp"
#include "kac/qcomb.hpp"

namespace kac {

namespace {

// C(g, k) as a polynomial in g.
QPoly binomial_in_g(unsigned k) {
  QPoly p = QPoly::constant(1);
  for (unsigned r = 0; r < k; ++r) p *= QPoly{-static_cast<long>(r), 1};
  return p * Rational(Integer(1), factorial(k));
}

Integer edge_factorial(const EdgeVector& k) {
  Integer f = 1;
  for (unsigned x : k.entries()) f *= factorial(x);
  return f;
}

Integer dim_factorial(const DimVector& a) {
  Integer f = 1;
  for (unsigned x : a.entries()) f *= factorial(x);
  return f;
}

void check_alpha(std::size_t n, const DimVector& alpha) {
  if (alpha.size() != n) throw ArgumentError("dimension vector length does not match n");
  if (alpha.is_zero()) throw ArgumentError("dimension vector must be nonzero");
}

}  // namespace

GPolynomial::GPolynomial(std::size_t n, MPoly p) : n_(n), p_(std::move(p)) {
  if (p_.arity() != pair_count(n)) throw ArgumentError("g-polynomial arity mismatch");
}

GPolynomial GPolynomial::from_binomial_basis(std::size_t n, const std::map<EdgeVector, Rational>& coeffs) {
  const std::size_t m = pair_count(n);
  MPoly acc(m);
  for (const auto& [k, c] : coeffs) {
    MPoly term = MPoly::constant(m, c);
    for (std::size_t v = 0; v < m; ++v) {
      if (k[v] == 0) continue;
      const QPoly uni = binomial_in_g(k[v]);
      MPoly factor(m);
      Exponent e(m, 0);
      for (std::size_t d = 0; d < uni.coefficients().size(); ++d) {
        e[v] = static_cast<unsigned>(d);
        factor.add_term(e, uni.coeff(d));
      }
      term = term * factor;
    }
    acc += term;
  }
  return GPolynomial(n, std::move(acc));
}

std::map<EdgeVector, Rational> GPolynomial::binomial_basis() const {
  // g^e = sum_k S(e, k) k! C(g, k), variable by variable.
  std::map<EdgeVector, Rational> out;
  const std::size_t m = pair_count(n_);
  for (const auto& [e, c] : p_.terms()) {
    std::map<std::vector<unsigned>, Rational> partial{{std::vector<unsigned>{}, c}};
    for (std::size_t v = 0; v < m; ++v) {
      std::map<std::vector<unsigned>, Rational> next;
      for (const auto& [prefix, val] : partial)
        for (unsigned k = 0; k <= e[v]; ++k) {
          Integer w = stirling2(e[v], k) * factorial(k);
          if (w == 0) continue;
          auto key = prefix;
          key.push_back(k);
          next[key] += val * Rational(w);
        }
      partial = std::move(next);
    }
    for (const auto& [key, val] : partial) out[EdgeVector(n_, key)] += val;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<EdgeVector, Rational> GPolynomial::top_homogeneous() const {
  std::map<EdgeVector, Rational> out;
  const long d = p_.total_degree();
  if (d < 0) return out;
  const MPoly top = p_.homogeneous_part(static_cast<unsigned>(d));
  for (const auto& [e, c] : top.terms()) out.emplace(EdgeVector(n_, e), c);
  return out;
}

Rational GPolynomial::operator()(const EdgeVector& g) const {
  std::vector<Rational> pt;
  for (unsigned x : g.entries()) pt.emplace_back(x);
  return p_.evaluate(pt);
}

std::vector<std::string> GPolynomial::variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) names.push_back("g" + std::to_string(i + 1) + std::to_string(j + 1));
  if (n == 1) names = {"g"};
  return names;
}

std::string GPolynomial::to_string() const { return p_.to_string(variable_names(n_)); }

GPolynomial LeadingComponent::as_polynomial(std::size_t n) const {
  MPoly p(pair_count(n));
  for (const auto& [ell, c] : terms) p.add_term(ell.entries(), c);
  return GPolynomial(n, std::move(p));
}

std::vector<EdgeVector> s_k_set(const EdgeVector& k) {
  EdgeVector cap = k;
  std::vector<bool> diag(k.size(), false);
  for (std::size_t i = 0; i < k.vertices(); ++i) diag[pair_index(k.vertices(), i, i)] = true;
  std::vector<EdgeVector> out;
  // Off-diagonal entries are pinned; enumerate diagonal entries only.
  EdgeVector free_cap = EdgeVector::zeros(k.vertices());
  for (std::size_t v = 0; v < k.size(); ++v)
    if (diag[v]) free_cap[v] = k[v];
  for (EdgeVector p : edge_box(free_cap)) {
    for (std::size_t v = 0; v < k.size(); ++v)
      if (!diag[v]) p[v] = k[v];
    out.push_back(std::move(p));
  }
  return out;
}

Integer c_coefficient(const DimVector& alpha, const EdgeVector& k, const EdgeVector& p) {
  const std::size_t n = k.vertices();
  if (p.vertices() != n || alpha.size() != n) throw ArgumentError("c_coefficient: size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const bool ok = i == j ? p.at(i, i) <= k.at(i, i) : p.at(i, j) == k.at(i, j);
      if (!ok) throw ArgumentError("c_coefficient: " + p.to_string() + " is not in S_" + k.to_string());
    }
  Integer product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const long pii = p.at(i, i), kii = k.at(i, i);
    Integer sum = 0;
    for (long j = 0; j <= pii; ++j) {
      Integer two;
      mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(pii - j));
      sum += binomial(pii, j) * binomial(alpha[i], kii - pii - j) * two;
    }
    product *= sum;
  }
  return product;
}

LeadingComponent leading_component(std::size_t n, const DimVector& alpha, unsigned s,
                                   const GraphCountTable& graphs) {
  check_alpha(n, alpha);
  const unsigned degree = s + alpha.total() - 1;
  if (graphs.ell != alpha || graphs.edge_budget < degree)
    throw ArgumentError("graph count table does not cover the leading component");
  LeadingComponent out{alpha, s, {}};
  Rational prefactor(factorial(s), dim_factorial(alpha));
  prefactor.canonicalize();
  for (const EdgeVector& ell : edge_vectors_of_total(n, degree)) {
    Rational sum;
    for (const EdgeVector& k : edge_box(ell)) {
      Integer stirling = 1;
      for (std::size_t v = 0; v < k.size() && stirling != 0; ++v) stirling *= stirling2(ell[v], k[v]);
      if (stirling == 0) continue;
      Integer inner = 0;
      for (const EdgeVector& p : s_k_set(k)) {
        Integer g = graphs.count(p);
        if (g != 0) inner += c_coefficient(alpha, k, p) * g;
      }
      sum += Rational(stirling * edge_factorial(k) * inner);
    }
    Rational coeff = prefactor * sum / Rational(edge_factorial(ell));
    if (coeff != 0) out.terms.emplace(ell, coeff);
  }
  return out;
}

LeadingComponent leading_component(std::size_t n, const DimVector& alpha, unsigned s) {
  check_alpha(n, alpha);
  return leading_component(n, alpha, s, connected_counts(alpha, s + alpha.total() - 1));
}

LeadingComponent leading_component_at_one(std::size_t n, const DimVector& alpha) {
  check_alpha(n, alpha);
  const unsigned degree = alpha.total() - 1;
  const GraphCountTable graphs = connected_counts(alpha, degree);
  LeadingComponent out{alpha, 0, {}};
  const Integer afact = dim_factorial(alpha);
  for (const auto& [k, g] : graphs.counts) {
    if (k.total() != degree) continue;
    Integer two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, k.diagonal_total());
    Rational coeff(two * g, afact);
    coeff.canonicalize();
    out.terms.emplace(k, coeff);
  }
  return out;
}

std::vector<GPolynomial> fit_polynomials_in_g(std::size_t n, const DimVector& alpha,
                                              const std::vector<unsigned>& s_values, unsigned degree_cap,
                                              unsigned threads) {
  check_alpha(n, alpha);
  for (unsigned s : s_values)
    if (degree_cap < s + alpha.total() - 1)
      throw ArgumentError("degree cap " + std::to_string(degree_cap) + " is below s + |alpha| - 1 = " +
                          std::to_string(s + alpha.total() - 1));
  const std::size_t m = pair_count(n);
  const unsigned side = degree_cap + 2;  // nodes 0..degree_cap+1
  const EdgeVector box(n, std::vector<unsigned>(m, degree_cap + 1));
  const std::vector<EdgeVector> grid = edge_box(box);

  std::vector<QPoly> samples(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t idx) {
    samples[idx] = kac_polynomial(Quiver(n, grid[idx]), alpha);
  });

  std::vector<GPolynomial> fits;
  for (unsigned s : s_values) {
    std::vector<Rational> v(grid.size());
    for (std::size_t idx = 0; idx < grid.size(); ++idx) v[idx] = qpoly_taylor_at_1(samples[idx], s);
    // grid is lexicographic with the last coordinate fastest.
    std::size_t stride = 1;
    for (std::size_t axis = m; axis-- > 0;) {
      for (std::size_t base = 0; base < v.size(); ++base) {
        if ((base / stride) % side != 0) continue;
        for (unsigned r = 1; r < side; ++r)
          for (unsigned j = side - 1; j >= r; --j) v[base + j * stride] -= v[base + (j - 1) * stride];
      }
      stride *= side;
    }
    std::map<EdgeVector, Rational> binom;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
      if (v[idx] == 0) continue;
      const auto& k = grid[idx];
      for (unsigned x : k.entries())
        if (x > degree_cap)
          throw InvariantError("finite difference of order " + std::to_string(x) + " at " + k.to_string() +
                               " does not vanish for alpha = " + alpha.to_string() + ", s = " + std::to_string(s) +
                               "; degree cap " + std::to_string(degree_cap) + " is too small");
      binom.emplace(k, v[idx]);
    }
    fits.push_back(GPolynomial::from_binomial_basis(n, binom));
  }
  return fits;
}

GPolynomial fit_polynomial_in_g(std::size_t n, const DimVector& alpha, unsigned s, unsigned degree_cap,
                                unsigned threads) {
  return fit_polynomials_in_g(n, alpha, {s}, degree_cap, threads).front();
}

}  // namespace kac
