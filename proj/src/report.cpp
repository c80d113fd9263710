#include "kac/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "kac/errors.hpp"

namespace kac {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

Json entries_json(const std::vector<unsigned>& v) { return Json(v); }

std::string entries_csv(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void render_table(std::ostream& out, const ReportTable& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].text.size());
  auto line = [&](const auto& cells, auto text_of) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string& v = text_of(cells[c]);
      s += c == 0 ? "" : "  ";
      s += c + 1 == cells.size() ? v : v + std::string(width[c] - v.size(), ' ');
    }
    out << s << "\n";
  };
  out << "[" << t.name << "]\n";
  line(t.columns, [](const std::string& s) -> const std::string& { return s; });
  for (const auto& row : t.rows) line(row, [](const Cell& c) -> const std::string& { return c.text; });
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ArgumentError("unknown format '" + name + "' (expected table, json or csv)");
}

Cell::Cell(std::string s) : text(s), json(s), csv(csv_field(s)) {}
Cell::Cell(long v) : text(std::to_string(v)), json(v), csv(text) {}
Cell::Cell(bool v) : text(v ? "yes" : "no"), json(v), csv(v ? "true" : "false") {}
Cell::Cell(const Integer& v) : text(v.get_str()), json(text), csv(text) {}
Cell::Cell(const Rational& v) : text(v.get_str()), json(text), csv(text) {}
Cell::Cell(const QPoly& p) : text(p.to_string()), json(qpoly_to_json(p)), csv(qpoly_to_csv(p)) {}
Cell::Cell(const GPolynomial& p) : text(p.to_string()), json(gpoly_to_json(p)), csv(gpoly_to_csv(p)) {}
Cell::Cell(const DimVector& v) : text(v.to_string()), json(entries_json(v.entries())), csv(entries_csv(v.entries())) {}
Cell::Cell(const EdgeVector& v) : text(v.to_string()), json(entries_json(v.entries())), csv(entries_csv(v.entries())) {}

ReportTable& RunReport::table(std::string name, std::vector<std::string> columns) {
  tables.push_back({std::move(name), std::move(columns), {}});
  return tables.back();
}

void RunReport::check(std::string name, bool passed, std::string expected, std::string actual) {
  checks.push_back({std::move(name), passed, std::move(expected), std::move(actual)});
}

std::size_t RunReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
}

bool RunReport::all_passed() const { return failures() == 0; }

std::string RunReport::render(OutputFormat format) const {
  std::ostringstream out;
  const std::string status = all_passed() ? "pass" : "fail";
  switch (format) {
    case OutputFormat::kTable: {
      out << "command: " << command << "\n";
      for (const auto& [k, v] : inputs) out << "  " << k << " = " << v.text << "\n";
      for (const auto& t : tables) {
        out << "\n";
        render_table(out, t);
      }
      if (!checks.empty()) {
        ReportTable ct{"checks", {"check", "status", "expected", "actual"}, {}};
        for (const auto& c : checks) ct.add({c.name, c.passed ? "PASS" : "FAIL", c.expected, c.actual});
        out << "\n";
        render_table(out, ct);
        out << "\n" << checks.size() - failures() << "/" << checks.size() << " checks passed\n";
      }
      out << "wall time: " << format_ms(wall_ms) << " ms\n";
      break;
    }
    case OutputFormat::kJson: {
      Json head{{"type", "run"}, {"command", command}, {"inputs", Json::object()}};
      for (const auto& [k, v] : inputs) head["inputs"][k] = v.json;
      out << head.dump() << "\n";
      for (const auto& t : tables)
        for (const auto& row : t.rows) {
          Json rec{{"type", "record"}, {"table", t.name}};
          for (std::size_t c = 0; c < row.size() && c < t.columns.size(); ++c) rec[t.columns[c]] = row[c].json;
          out << rec.dump() << "\n";
        }
      for (const auto& c : checks)
        out << Json{{"type", "check"}, {"name", c.name}, {"status", c.passed ? "pass" : "fail"},
                    {"expected", c.expected}, {"actual", c.actual}}
                   .dump()
            << "\n";
      out << Json{{"type", "summary"}, {"status", status}, {"checks", checks.size()}, {"failed", failures()}}.dump()
          << "\n";
      out << Json{{"type", "timing"}, {"wall_ms", wall_ms}}.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv: {
      out << "run,command\nrun," << csv_field(command) << "\n";
      if (!inputs.empty()) {
        out << "\ninput,name,value\n";
        for (const auto& [k, v] : inputs) out << "input," << csv_field(k) << "," << v.csv << "\n";
      }
      for (const auto& t : tables) {
        out << "\n" << csv_field(t.name);
        for (const auto& c : t.columns) out << "," << csv_field(c);
        out << "\n";
        for (const auto& row : t.rows) {
          out << csv_field(t.name);
          for (const auto& cell : row) out << "," << cell.csv;
          out << "\n";
        }
      }
      out << "\ncheck,name,status,expected,actual\n";
      for (const auto& c : checks)
        out << "check," << csv_field(c.name) << "," << (c.passed ? "pass" : "fail") << "," << csv_field(c.expected)
            << "," << csv_field(c.actual) << "\n";
      out << "\nsummary,status,checks,failed\nsummary," << status << "," << checks.size() << "," << failures() << "\n";
      out << "\ntiming,wall_ms\ntiming," << format_ms(wall_ms) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace kac
