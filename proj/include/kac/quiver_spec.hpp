#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kac/quiver.hpp"

namespace kac {

struct QuiverEdge {
  std::size_t i = 0;  // 1-based, i <= j
  std::size_t j = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const QuiverEdge&, const QuiverEdge&) = default;
};

/// Parsed quiver description. Text format, one statement per line or
/// separated by ';', '#' starts a comment:
///
///   name = S_3
///   n = 1
///   1-1: 3
struct QuiverSpec {
  std::size_t n = 0;
  std::vector<QuiverEdge> edges;
  std::optional<std::string> name;

  Quiver quiver() const;
  std::string to_string() const;
};

/// Throws ParseError with the offending line and field.
QuiverSpec parse_quiver_spec(std::string_view text);
QuiverSpec load_quiver_spec(const std::string& path);

}  // namespace kac
