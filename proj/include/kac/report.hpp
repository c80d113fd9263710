#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "kac/leading.hpp"
#include "kac/qpoly.hpp"
#include "kac/serialize.hpp"

namespace kac {

enum class OutputFormat { kTable, kJson, kCsv };

OutputFormat parse_output_format(const std::string& name);

/// One value in three renderings: aligned text, JSON, and a CSV field.
struct Cell {
  std::string text;
  Json json;
  std::string csv;

  Cell() = default;
  Cell(const char* s) : Cell(std::string(s)) {}
  Cell(std::string s);
  Cell(long v);
  Cell(unsigned v) : Cell(static_cast<long>(v)) {}
  Cell(int v) : Cell(static_cast<long>(v)) {}
  Cell(bool v);
  Cell(const Integer& v);
  Cell(const Rational& v);
  Cell(const QPoly& p);
  Cell(const GPolynomial& p);
  Cell(const DimVector& v);
  Cell(const EdgeVector& v);
};

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, Cell>> inputs;
  std::deque<ReportTable> tables;
  std::vector<CheckResult> checks;
  double wall_ms = 0;

  /// The returned reference stays valid as more tables are added.
  ReportTable& table(std::string name, std::vector<std::string> columns);
  void check(std::string name, bool passed, std::string expected = {}, std::string actual = {});
  bool all_passed() const;
  std::size_t failures() const;
  /// Everything except the timing line is a function of the inputs.
  std::string render(OutputFormat format) const;
};

}  // namespace kac
