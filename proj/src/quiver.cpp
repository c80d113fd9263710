#include "kac/quiver.hpp"

#include <numeric>

#include "kac/errors.hpp"

namespace kac {

std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t row = n - i;
    if (index < row) return {i, i + index};
    index -= row;
  }
  throw ArgumentError("pair index out of range");
}

unsigned DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0u); }

unsigned DimVector::gcd() const {
  unsigned g = 0;
  for (unsigned x : v_) g = std::gcd(g, x);
  return g;
}

bool DimVector::is_zero() const { return total() == 0; }

std::string DimVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
  return s + ")";
}

EdgeVector::EdgeVector(std::size_t n, std::vector<unsigned> entries) : n_(n), v_(std::move(entries)) {
  if (v_.size() != pair_count(n))
    throw ArgumentError("edge vector on " + std::to_string(n) + " vertices needs " +
                        std::to_string(pair_count(n)) + " entries, got " + std::to_string(v_.size()));
}

unsigned EdgeVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0u); }

unsigned EdgeVector::diagonal_total() const {
  unsigned t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool EdgeVector::leq(const EdgeVector& o) const {
  if (o.v_.size() != v_.size()) return false;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] > o.v_[i]) return false;
  return true;
}

std::string EdgeVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
  return s + ")";
}

std::vector<EdgeVector> edge_box(const EdgeVector& cap) {
  std::vector<EdgeVector> out;
  std::vector<unsigned> cur(cap.size(), 0);
  while (true) {
    out.emplace_back(cap.vertices(), cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < cap[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

namespace {

void compositions(std::size_t pos, unsigned left, std::vector<unsigned>& cur, std::size_t n,
                  std::vector<EdgeVector>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.emplace_back(n, cur);
    return;
  }
  for (unsigned v = left + 1; v-- > 0;) {
    cur[pos] = v;
    compositions(pos + 1, left - v, cur, n, out);
  }
}

}  // namespace

std::vector<EdgeVector> edge_vectors_of_total(std::size_t n, unsigned total) {
  std::vector<EdgeVector> out;
  if (n == 0) return out;
  std::vector<unsigned> cur(pair_count(n), 0);
  compositions(0, total, cur, n, out);
  return out;
}

Quiver::Quiver(std::size_t n, std::vector<unsigned> multiplicities) : n_(n), g_(std::move(multiplicities)) {
  if (n == 0) throw ArgumentError("a quiver needs at least one vertex");
  if (g_.size() != pair_count(n))
    throw ArgumentError("quiver on " + std::to_string(n) + " vertices needs " + std::to_string(pair_count(n)) +
                        " multiplicities, got " + std::to_string(g_.size()));
}

Quiver Quiver::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw ArgumentError("permutation size mismatch");
  std::vector<unsigned> g(g_.size());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) g[pair_index(n_, i, j)] = edges(perm[i], perm[j]);
  return Quiver(n_, std::move(g));
}

}  // namespace kac
