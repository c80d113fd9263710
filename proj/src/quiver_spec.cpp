#include "kac/quiver_spec.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "kac/errors.hpp"

namespace kac {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

unsigned long parse_count(std::string_view text, int line, const std::string& field) {
  text = trim(text);
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      v > std::numeric_limits<unsigned>::max())
    throw ParseError(line, field, "expected a nonnegative integer, got '" + std::string(text) + "'");
  return v;
}

struct Statement {
  int line;
  std::string_view text;
};

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  int line = 0;
  while (!text.empty() || line == 0) {
    ++line;
    const auto nl = text.find('\n');
    std::string_view row = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    row = row.substr(0, row.find('#'));
    while (!row.empty()) {
      const auto semi = row.find(';');
      if (auto stmt = trim(row.substr(0, semi)); !stmt.empty()) out.push_back({line, stmt});
      row = semi == std::string_view::npos ? std::string_view{} : row.substr(semi + 1);
    }
  }
  return out;
}

}  // namespace

QuiverSpec parse_quiver_spec(std::string_view text) {
  QuiverSpec spec;
  std::optional<int> n_line;
  struct Pending {
    QuiverEdge edge;
    int line;
    std::string field;
  };
  std::vector<Pending> pending;

  for (const auto& [line, stmt] : split_statements(text)) {
    if (auto eq = stmt.find('='); eq != std::string_view::npos) {
      const std::string key(trim(stmt.substr(0, eq)));
      const std::string_view value = trim(stmt.substr(eq + 1));
      if (key == "n") {
        if (n_line) throw ParseError(line, "n", "n given twice (first on line " + std::to_string(*n_line) + ")");
        spec.n = parse_count(value, line, "n");
        if (spec.n == 0) throw ParseError(line, "n", "a quiver needs at least one vertex");
        n_line = line;
      } else if (key == "name") {
        if (spec.name) throw ParseError(line, "name", "name given twice");
        spec.name = std::string(value);
      } else {
        throw ParseError(line, key, "unknown key");
      }
      continue;
    }
    const auto colon = stmt.find(':');
    const auto dash = stmt.find('-');
    if (colon == std::string_view::npos || dash == std::string_view::npos || dash > colon)
      throw ParseError(line, std::string(stmt), "expected 'key = value' or an edge 'i-j: multiplicity'");
    const std::string field(trim(stmt.substr(0, colon)));
    QuiverEdge e;
    e.i = parse_count(stmt.substr(0, dash), line, field);
    e.j = parse_count(stmt.substr(dash + 1, colon - dash - 1), line, field);
    e.multiplicity = static_cast<unsigned>(parse_count(stmt.substr(colon + 1), line, field));
    pending.push_back({e, line, field});
  }

  if (!n_line) throw ParseError(1, "n", "missing vertex count 'n = ...'");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [e, line, field] : pending) {
    if (e.i < 1 || e.j < 1 || e.i > spec.n || e.j > spec.n)
      throw ParseError(line, field, "vertex out of range 1.." + std::to_string(spec.n));
    if (e.i > e.j) throw ParseError(line, field, "write the pair with i <= j");
    if (!seen.insert({e.i, e.j}).second) throw ParseError(line, field, "duplicate pair");
    spec.edges.push_back(e);
  }
  return spec;
}

QuiverSpec load_quiver_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open quiver spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver_spec(buf.str());
}

Quiver QuiverSpec::quiver() const {
  std::vector<unsigned> g(pair_count(n), 0);
  for (const auto& e : edges) g[pair_index(n, e.i - 1, e.j - 1)] = e.multiplicity;
  return Quiver(n, std::move(g));
}

std::string QuiverSpec::to_string() const {
  std::string s;
  if (name) s += "name=" + *name + "; ";
  s += "n=" + std::to_string(n);
  for (const auto& e : edges)
    s += "; " + std::to_string(e.i) + "-" + std::to_string(e.j) + ":" + std::to_string(e.multiplicity);
  return s;
}

}  // namespace kac
