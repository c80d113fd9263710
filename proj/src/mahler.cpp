#include "kac/mahler.hpp"

#include <algorithm>

#include "kac/errors.hpp"
#include "kac/graph_counts.hpp"
#include "kac/hua.hpp"
#include "kac/parallel.hpp"
#include "kac/qcomb.hpp"

namespace kac {

namespace {

Integer edge_factorial(const EdgeVector& k) {
  Integer f = 1;
  for (unsigned x : k.entries()) f *= factorial(x);
  return f;
}

// (-1)^j q^(j(j-1)/2) [ell choose j]_q
QPoly difference_weight(unsigned ell, unsigned j) {
  QPoly w = qbinom(ell, j).shifted(static_cast<std::size_t>(j) * (j ? j - 1 : 0) / 2);
  return j % 2 ? -w : w;
}

void require_integral(const QPoly& c, const EdgeVector& ell) {
  if (!c.has_integer_coefficients())
    throw InvariantError("q-difference coefficient at " + ell.to_string() + " is not integral: " + c.to_string());
}

class GridCache {
 public:
  GridCache(std::size_t n, DimVector alpha, unsigned threads) : n_(n), alpha_(std::move(alpha)), threads_(threads) {}

  void fill(const std::vector<EdgeVector>& points) {
    std::vector<EdgeVector> missing;
    for (const auto& p : points)
      if (!values_.contains(p)) missing.push_back(p);
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    std::vector<QPoly> out(missing.size());
    parallel_for(missing.size(), threads_, [&](std::size_t i) { out[i] = kac_polynomial(Quiver(n_, missing[i]), alpha_); });
    for (std::size_t i = 0; i < missing.size(); ++i) values_.emplace(missing[i], std::move(out[i]));
  }

  const QPoly& operator()(const EdgeVector& g) {
    auto it = values_.find(g);
    if (it == values_.end()) it = values_.emplace(g, kac_polynomial(Quiver(n_, g), alpha_)).first;
    return it->second;
  }

 private:
  std::size_t n_;
  DimVector alpha_;
  unsigned threads_;
  std::map<EdgeVector, QPoly> values_;
};

// Axis-by-axis q-difference transform of the grid values on `box`.
std::map<EdgeVector, QPoly> extract(const EdgeVector& box, GridCache& grid) {
  const std::vector<EdgeVector> points = edge_box(box);
  std::map<EdgeVector, QPoly> cur;
  for (const auto& p : points) cur.emplace(p, grid(p));
  for (std::size_t axis = 0; axis < box.size(); ++axis) {
    std::map<EdgeVector, QPoly> next;
    for (const auto& p : points) {
      QPoly acc;
      EdgeVector src = p;
      for (unsigned j = 0; j <= p[axis]; ++j) {
        src[axis] = p[axis] - j;
        acc += difference_weight(p[axis], j) * cur.at(src);
      }
      next.emplace(p, std::move(acc));
    }
    cur = std::move(next);
  }
  std::map<EdgeVector, QPoly> out;
  for (auto& [k, c] : cur) {
    require_integral(c, k);
    if (!c.is_zero()) out.emplace(k, std::move(c));
  }
  return out;
}

EdgeVector shifted_box(const EdgeVector& box, unsigned t) {
  EdgeVector g = box;
  for (std::size_t v = 0; v < g.size(); ++v) g[v] += t;
  return g;
}

}  // namespace

QPoly qdifference_coefficient(const GridFunction& evaluate, const EdgeVector& ell) {
  QPoly total;
  for (const EdgeVector& j : edge_box(ell)) {
    QPoly weight = QPoly::constant(1);
    EdgeVector at = ell;
    for (std::size_t v = 0; v < ell.size(); ++v) {
      weight *= difference_weight(ell[v], j[v]);
      at[v] = ell[v] - j[v];
    }
    total += weight * evaluate(at);
  }
  require_integral(total, ell);
  return total;
}

RatFunc angle_binomial(unsigned ell, unsigned b) {
  RatFunc r(1);
  for (unsigned i = 0; i < ell; ++i) {
    r *= RatFunc::q_power(static_cast<long>(b) - static_cast<long>(i)) - RatFunc(1);
    r /= RatFunc::q_power(i + 1) - RatFunc(1);
  }
  return r;
}

QPoly MahlerTable::coeff(const EdgeVector& k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? QPoly() : it->second;
}

QPoly MahlerTable::reconstruct(const EdgeVector& g) const {
  QPoly total;
  for (const auto& [k, a] : coeffs) {
    QPoly term = a;
    for (std::size_t v = 0; v < k.size() && !term.is_zero(); ++v) term *= qbinom(g[v], k[v]);
    total += term;
  }
  return total;
}

std::map<EdgeVector, Rational> MahlerTable::at_one() const {
  std::map<EdgeVector, Rational> out;
  for (const auto& [k, a] : coeffs) {
    Rational v = a(Rational(1));
    if (v != 0) out.emplace(k, v);
  }
  return out;
}

EdgeVector mahler_support_bound(std::size_t n, const DimVector& alpha) {
  if (alpha.size() != n) throw ArgumentError("dimension vector length does not match n");
  EdgeVector b = EdgeVector::zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b[pair_index(n, i, j)] = alpha[i] * alpha[j];
  return b;
}

EdgeVector mahler_default_box(std::size_t n, const DimVector& alpha) {
  EdgeVector box = mahler_support_bound(n, alpha);
  for (std::size_t v = 0; v < box.size(); ++v) box[v] = std::min(box[v], alpha.total() + 2);
  return box;
}

MahlerTable mahler_table(std::size_t n, const DimVector& alpha, const EdgeVector& box, bool extend,
                         unsigned threads) {
  if (alpha.size() != n || box.vertices() != n) throw ArgumentError("mahler_table: size mismatch");
  if (alpha.is_zero()) throw ArgumentError("dimension vector must be nonzero");
  const EdgeVector bound = mahler_support_bound(n, alpha);
  GridCache grid(n, alpha, threads);
  EdgeVector current = box;
  for (;;) {
    std::vector<EdgeVector> points = edge_box(current);
    for (unsigned t = 1; t <= 3; ++t) points.push_back(shifted_box(current, t));
    grid.fill(points);

    MahlerTable table{n, alpha, current, extract(current, grid)};
    std::optional<EdgeVector> mismatch;
    for (const auto& g : points)
      if (table.reconstruct(g) != grid(g)) {
        mismatch = g;
        break;
      }
    if (!mismatch) return table;

    const bool saturated = current.leq(bound) && bound.leq(current);
    if (!extend || saturated)
      throw InvariantError("reconstruction mismatch at g = " + mismatch->to_string() + " for box " +
                           current.to_string());
    EdgeVector next = current;
    for (std::size_t v = 0; v < next.size(); ++v) next[v] = std::min(std::max(1u, 2 * next[v]), bound[v]);
    if (next == current) next = bound;
    current = next;
  }
}

CoefficientDerivativeCheck check_coefficient_derivative(std::size_t n, const DimVector& alpha, const EdgeVector& k) {
  if (alpha.size() != n || k.vertices() != n) throw ArgumentError("check_coefficient_derivative: size mismatch");
  if (k.total() < alpha.total())
    throw ArgumentError("|k| = " + std::to_string(k.total()) + " is below |alpha| = " + std::to_string(alpha.total()));
  CoefficientDerivativeCheck r;
  r.k = k;
  r.boundary = k.total() == alpha.total();
  r.required_order = k.total() - alpha.total() + 1;

  const QPoly a = qdifference_coefficient(
      [&](const EdgeVector& g) { return kac_polynomial(Quiver(n, g), alpha); }, k);
  if (!a.is_zero()) {
    r.actual_order = vanishing_order_at_1(a);
    if (*r.actual_order < r.required_order)
      throw InvariantError("a(alpha, k, q) for k = " + k.to_string() + " vanishes to order " +
                           std::to_string(*r.actual_order) + " at q = 1, expected at least " +
                           std::to_string(r.required_order));
    r.actual = qpoly_taylor_at_1(a, r.required_order) / Rational(factorial(r.required_order));
  }

  const GraphCountTable graphs = connected_counts(alpha, k.total());
  Integer sum = 0;
  for (const EdgeVector& p : s_k_set(k)) {
    Integer g = graphs.count(p);
    if (g != 0) sum += c_coefficient(alpha, k, p) * g;
  }
  Integer afact = 1;
  for (unsigned x : alpha.entries()) afact *= factorial(x);
  r.expected = Rational(edge_factorial(k) * sum, afact);
  r.expected.canonicalize();
  r.passed = r.expected == r.actual;
  return r;
}

}  // namespace kac
