#include "kac/partition.hpp"

#include <algorithm>
#include <numeric>

#include "kac/errors.hpp"

namespace kac {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ArgumentError("partition parts must be weakly decreasing");
  }
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::vector<unsigned> Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<unsigned> t(parts_.front(), 0);
  for (unsigned p : parts_)
    for (unsigned i = 0; i < p; ++i) ++t[i];
  return t;
}

std::vector<unsigned> Partition::multiplicities() const {
  std::vector<unsigned> n(parts_.empty() ? 1 : parts_.front() + 1, 0);
  for (unsigned p : parts_) ++n[p];
  return n;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

namespace {

void generate(unsigned left, unsigned max_part, std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(left - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned m) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  generate(m, m, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(unsigned N) {
  std::vector<Partition> out;
  for (unsigned m = 0; m <= N; ++m) {
    auto part = partitions_of(m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

unsigned pairing(const Partition& lambda, const Partition& mu) {
  const auto a = lambda.transpose();
  const auto b = mu.transpose();
  unsigned s = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace kac
