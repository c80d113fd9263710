#pragma once

#include <map>
#include <vector>

#include "kac/bigrational.hpp"
#include "kac/mpoly.hpp"
#include "kac/quiver.hpp"

namespace kac {

/// G_k^ell for every edge-type vector k with |k| <= edge_budget: the number of
/// connected simple graphs on classes V_1..V_n of sizes ell with k_ij edges
/// between V_i and V_j. Only nonzero counts are stored.
struct GraphCountTable {
  DimVector ell;
  unsigned edge_budget = 0;
  std::map<EdgeVector, Integer> counts;

  Integer count(const EdgeVector& k) const;
  friend bool operator==(const GraphCountTable&, const GraphCountTable&) = default;
};

/// prod_{i<j} (1+x_ij)^(ell_i ell_j) * prod_i (1+x_ii)^C(ell_i,2), truncated to
/// total x-degree <= budget. Variables follow pair_index order.
MPoly all_graphs_generating_polynomial(const DimVector& ell, unsigned budget);

/// Connected counts from the logarithm of the exponential generating series
/// of all graphs.
GraphCountTable connected_counts(const DimVector& ell, unsigned budget);

/// Largest number of potential edges the brute-force oracle accepts.
inline constexpr unsigned kBruteForceEdgeLimit = 24;

/// Connected counts by enumerating every edge subset. Throws ArgumentError
/// when the instance has more than kBruteForceEdgeLimit potential edges.
GraphCountTable connected_counts_bruteforce(const DimVector& ell, unsigned budget);

/// A function on N^n \ {0} (or N^n), given by its nonzero values.
using ClassFunction = std::map<std::vector<unsigned>, Rational>;

/// Largest |bound| the set-partition enumeration accepts.
inline constexpr unsigned kSetPartitionLimit = 8;

/// g(beta) for beta <= bound: the sum over set partitions of a set split
/// into classes of sizes beta of the product of f over block class profiles.
ClassFunction exponential_formula_bruteforce(const ClassFunction& f, const DimVector& bound);

/// g(beta) = beta! [X^beta] exp(E_f(X)), beta <= bound.
ClassFunction exponential_formula_series(const ClassFunction& f, const DimVector& bound);

/// Whether the two routes above agree on every beta <= bound. Throws
/// ArgumentError when |bound| exceeds kSetPartitionLimit.
bool exponential_formula_check(const ClassFunction& f, const DimVector& bound);

}  // namespace kac
