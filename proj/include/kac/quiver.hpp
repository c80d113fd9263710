#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kac {

/// Number of unordered vertex pairs (i, j), i <= j, on n vertices.
constexpr std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

/// Position of the pair (i, j), 0 <= i <= j < n, in the order
/// (0,0), (0,1), ..., (0,n-1), (1,1), ..., (n-1,n-1).
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

/// Inverse of pair_index.
std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index);

/// Dimension vector: one nonnegative entry per vertex.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<unsigned> entries) : v_(std::move(entries)) {}
  DimVector(std::initializer_list<unsigned> entries) : v_(entries) {}

  std::size_t size() const noexcept { return v_.size(); }
  unsigned operator[](std::size_t i) const { return v_[i]; }
  const std::vector<unsigned>& entries() const noexcept { return v_; }
  unsigned total() const;
  /// gcd of the entries; 0 for the zero vector.
  unsigned gcd() const;
  bool is_zero() const;
  std::string to_string() const;

  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<unsigned> v_;
};

/// Entries k_ij for 0 <= i <= j < n in pair_index order: edge-type counts,
/// Mahler indices, or exponents of monomials in the g_ij.
class EdgeVector {
 public:
  EdgeVector() = default;
  EdgeVector(std::size_t n, std::vector<unsigned> entries);
  static EdgeVector zeros(std::size_t n) { return EdgeVector(n, std::vector<unsigned>(pair_count(n), 0)); }

  std::size_t vertices() const noexcept { return n_; }
  std::size_t size() const noexcept { return v_.size(); }
  unsigned operator[](std::size_t idx) const { return v_[idx]; }
  unsigned& operator[](std::size_t idx) { return v_[idx]; }
  unsigned at(std::size_t i, std::size_t j) const { return v_[pair_index(n_, i, j)]; }
  const std::vector<unsigned>& entries() const noexcept { return v_; }
  unsigned total() const;
  /// Sum of the diagonal entries k_ii.
  unsigned diagonal_total() const;
  bool leq(const EdgeVector& o) const;
  std::string to_string() const;

  friend auto operator<=>(const EdgeVector&, const EdgeVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned> v_;
};

/// Every EdgeVector on n vertices with entries <= cap (componentwise), in
/// lexicographic order.
std::vector<EdgeVector> edge_box(const EdgeVector& cap);

/// Every EdgeVector on n vertices with the given total, in decreasing
/// lexicographic order.
std::vector<EdgeVector> edge_vectors_of_total(std::size_t n, unsigned total);

/// Quiver up to orientation: n vertices and symmetric edge multiplicities
/// g_ij (g_ii counts loops at vertex i).
class Quiver {
 public:
  Quiver(std::size_t n, std::vector<unsigned> multiplicities);
  Quiver(std::size_t n, const EdgeVector& g) : Quiver(n, g.entries()) {}

  /// One vertex with g loops.
  static Quiver loops(unsigned g) { return Quiver(1, {g}); }
  /// Two vertices joined by g arrows, no loops.
  static Quiver kronecker(unsigned g) { return Quiver(2, {0, g, 0}); }

  std::size_t vertices() const noexcept { return n_; }
  unsigned edges(std::size_t i, std::size_t j) const { return g_[pair_index(n_, i, j)]; }
  EdgeVector multiplicities() const { return EdgeVector(n_, g_); }

  /// Relabel vertices: vertex i of the result is vertex perm[i] of this quiver.
  Quiver permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t n_;
  std::vector<unsigned> g_;
};

}  // namespace kac
