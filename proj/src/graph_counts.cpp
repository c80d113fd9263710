#include "kac/graph_counts.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

#include "kac/errors.hpp"
#include "kac/trunc_series.hpp"

namespace kac {

namespace {

struct TruncateDegree {
  unsigned cap;
  void operator()(MPoly& p) const { p = p.truncated(cap); }
};

Integer multi_factorial(std::span<const unsigned> beta) {
  Integer f = 1;
  for (unsigned b : beta) f *= factorial(b);
  return f;
}

// Class label of each vertex: V_1 = first ell_1 vertices, and so on.
std::vector<std::size_t> vertex_classes(const DimVector& ell) {
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < ell.size(); ++i) cls.insert(cls.end(), ell[i], i);
  return cls;
}

}  // namespace

Integer GraphCountTable::count(const EdgeVector& k) const {
  auto it = counts.find(k);
  return it == counts.end() ? Integer(0) : it->second;
}

MPoly all_graphs_generating_polynomial(const DimVector& ell, unsigned budget) {
  const std::size_t n = ell.size();
  const std::size_t m = pair_count(n);
  MPoly acc = MPoly::constant(m, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const long slots = i == j ? static_cast<long>(ell[i]) * (static_cast<long>(ell[i]) - 1) / 2
                                : static_cast<long>(ell[i]) * ell[j];
      if (slots == 0) continue;
      MPoly factor(m);
      Exponent e(m, 0);
      for (long d = 0; d <= std::min<long>(slots, budget); ++d) {
        e[pair_index(n, i, j)] = static_cast<unsigned>(d);
        factor.add_term(e, Rational(binomial(slots, d)));
      }
      acc = MPoly::mul_truncated(acc, factor, budget);
    }
  return acc;
}

GraphCountTable connected_counts(const DimVector& ell, unsigned budget) {
  const std::size_t n = ell.size();
  if (n == 0) throw ArgumentError("graph counts need at least one class");
  const std::size_t m = pair_count(n);
  GraphCountTable table{ell, budget, {}};
  if (ell.is_zero()) return table;

  TruncSeries<MPoly> egf(ell.entries(), MPoly(m), MPoly::constant(m, 1));
  for (std::size_t cell = 0; cell < egf.size(); ++cell) {
    const auto& beta = egf.exponent(cell);
    egf[cell] = all_graphs_generating_polynomial(DimVector(beta), budget) *
                Rational(Integer(1), multi_factorial(beta));
  }
  auto log = series_log_recurrence(egf, TruncateDegree{budget});
  const MPoly& top = log.at(ell.entries());
  const Integer scale = multi_factorial(ell.entries());
  for (const auto& [e, c] : top.terms()) {
    Rational v = c * Rational(scale);
    if (!is_integer(v)) throw InvariantError("non-integral connected graph count " + to_string(v));
    table.counts.emplace(EdgeVector(n, e), v.get_num());
  }
  return table;
}

GraphCountTable connected_counts_bruteforce(const DimVector& ell, unsigned budget) {
  const std::size_t n = ell.size();
  if (n == 0) throw ArgumentError("graph counts need at least one class");
  GraphCountTable table{ell, budget, {}};
  const auto cls = vertex_classes(ell);
  const std::size_t nv = cls.size();
  if (nv == 0) return table;

  std::vector<std::pair<unsigned, unsigned>> edges;
  std::vector<std::size_t> edge_type;
  for (unsigned u = 0; u < nv; ++u)
    for (unsigned v = u + 1; v < nv; ++v) {
      edges.emplace_back(u, v);
      edge_type.push_back(pair_index(n, cls[u], cls[v]));
    }
  if (edges.size() > kBruteForceEdgeLimit)
    throw ArgumentError("instance too large for the brute-force oracle: " + std::to_string(edges.size()) +
                        " potential edges (limit " + std::to_string(kBruteForceEdgeLimit) + ")");

  std::map<std::vector<unsigned>, unsigned long> tally;
  std::vector<unsigned> parent(nv);
  std::vector<unsigned> k(pair_count(n));
  const std::uint32_t limit = std::uint32_t{1} << edges.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) > budget) continue;
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 < nv) continue;
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    unsigned components = static_cast<unsigned>(nv);
    std::fill(k.begin(), k.end(), 0u);
    for (std::size_t b = 0; b < edges.size(); ++b) {
      if (!(mask >> b & 1u)) continue;
      ++k[edge_type[b]];
      unsigned ru = find(edges[b].first), rv = find(edges[b].second);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
    if (components == 1) ++tally[k];
  }
  for (const auto& [kv, c] : tally) table.counts.emplace(EdgeVector(n, kv), Integer(c));
  return table;
}

namespace {

Rational lookup(const ClassFunction& f, const std::vector<unsigned>& beta) {
  auto it = f.find(beta);
  return it == f.end() ? Rational(0) : it->second;
}

void check_bound(const DimVector& bound) {
  if (bound.total() > kSetPartitionLimit)
    throw ArgumentError("set-partition enumeration limited to |bound| <= " + std::to_string(kSetPartitionLimit));
}

// Sum over set partitions of the labelled vertices (restricted growth strings).
Rational partition_sum(const ClassFunction& f, const std::vector<std::size_t>& cls, std::size_t n) {
  const std::size_t nv = cls.size();
  if (nv == 0) return 1;
  std::vector<unsigned> block(nv, 0);
  Rational total;
  std::vector<std::vector<unsigned>> profile;
  while (true) {
    unsigned blocks = 0;
    for (unsigned b : block) blocks = std::max(blocks, b + 1);
    profile.assign(blocks, std::vector<unsigned>(n, 0));
    for (std::size_t v = 0; v < nv; ++v) ++profile[block[v]][cls[v]];
    Rational term = 1;
    for (const auto& pr : profile) {
      term *= lookup(f, pr);
      if (term == 0) break;
    }
    total += term;
    // Next restricted growth string: block[v] <= 1 + max(block[0..v-1]).
    std::size_t v = nv;
    bool advanced = false;
    while (v > 1) {
      --v;
      unsigned prefix_max = 0;
      for (std::size_t u = 0; u < v; ++u) prefix_max = std::max(prefix_max, block[u]);
      if (block[v] <= prefix_max) {
        ++block[v];
        for (std::size_t u = v + 1; u < nv; ++u) block[u] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return total;
}

}  // namespace

ClassFunction exponential_formula_bruteforce(const ClassFunction& f, const DimVector& bound) {
  check_bound(bound);
  ClassFunction g;
  TruncSeries<Rational> box(bound.entries(), Rational(0), Rational(1));
  for (std::size_t cell = 0; cell < box.size(); ++cell) {
    const auto& beta = box.exponent(cell);
    Rational v = partition_sum(f, vertex_classes(DimVector(beta)), bound.size());
    if (v != 0) g.emplace(beta, v);
  }
  return g;
}

ClassFunction exponential_formula_series(const ClassFunction& f, const DimVector& bound) {
  TruncSeries<Rational> ef(bound.entries(), Rational(0), Rational(1));
  for (std::size_t cell = 1; cell < ef.size(); ++cell) {
    const auto& beta = ef.exponent(cell);
    ef[cell] = lookup(f, beta) / Rational(multi_factorial(beta));
  }
  auto eg = series_exp(ef);
  ClassFunction g;
  for (std::size_t cell = 0; cell < eg.size(); ++cell) {
    Rational v = eg[cell] * Rational(multi_factorial(eg.exponent(cell)));
    if (v != 0) g.emplace(eg.exponent(cell), v);
  }
  return g;
}

bool exponential_formula_check(const ClassFunction& f, const DimVector& bound) {
  check_bound(bound);
  return exponential_formula_bruteforce(f, bound) == exponential_formula_series(f, bound);
}

}  // namespace kac
