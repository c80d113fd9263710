#pragma once

#include <compare>
#include <string>
#include <vector>

namespace kac {

/// Integer partition as a weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws ArgumentError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  unsigned size() const;    // |lambda|
  std::size_t length() const noexcept { return parts_.size(); }
  /// lambda'_i = number of parts >= i, for i = 1..lambda_1.
  std::vector<unsigned> transpose() const;
  /// n_i = number of parts equal to i, indexed from 1 (index 0 unused).
  std::vector<unsigned> multiplicities() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Partitions of m in reverse lexicographic order: (m), (m-1,1), ..., (1^m).
std::vector<Partition> partitions_of(unsigned m);

/// Partitions of 0, 1, ..., N, grouped by size and each group ordered as in
/// partitions_of.
std::vector<Partition> partitions_up_to(unsigned N);

/// Hua pairing: sum_i lambda'_i mu'_i.
unsigned pairing(const Partition& lambda, const Partition& mu);

}  // namespace kac
