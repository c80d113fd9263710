#include <doctest.h>

#include <random>
#include <sstream>

#include "kac/errors.hpp"
#include "kac/quiver_spec.hpp"
#include "kac/report.hpp"
#include "kac/serialize.hpp"
#include "kac/verify.hpp"

using namespace kac;

namespace {

int error_line(std::string_view text) {
  try {
    parse_quiver_spec(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string error_field(std::string_view text) {
  try {
    parse_quiver_spec(text);
  } catch (const ParseError& e) {
    return e.field();
  }
  return {};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("quiver spec files") {
  const QuiverSpec s = parse_quiver_spec("# example\nname = triangle\nn = 3\n1-2: 1\n2-3: 2  # two arrows\n\n1-1:4\n");
  CHECK(s.n == 3);
  CHECK(s.name == "triangle");
  CHECK(s.edges.size() == 3);
  CHECK(s.quiver() == Quiver(3, {4, 1, 0, 0, 2, 0}));
  CHECK(parse_quiver_spec(s.to_string()).quiver() == s.quiver());

  const QuiverSpec inline_spec = parse_quiver_spec("n=1; 1-1:3");
  CHECK(inline_spec.quiver() == Quiver::loops(3));
  CHECK(parse_quiver_spec("n=2").quiver() == Quiver(2, {0, 0, 0}));
}

TEST_CASE("quiver spec errors carry line and field") {
  CHECK(error_line("n = 2\n1-2: 1\n1-2: 3\n") == 3);
  CHECK(error_field("n = 2\n1-2: 1\n1-2: 3\n") == "1-2");
  CHECK(error_line("n=2\n2-1:1") == 2);
  CHECK(error_field("n=1; 1-2:3") == "1-2");
  CHECK(error_field("n = x") == "n");
  CHECK(error_field("1-1: 2") == "n");
  CHECK(error_line("n=1\n\ncolour = red") == 3);
  CHECK(error_field("n=1\n1-1: -2") == "1-1");
  CHECK(error_line("n=1\nn=2") == 2);
  CHECK(error_line("n=0") == 1);
  CHECK(error_line("n=2\nloops") == 2);
  CHECK_THROWS_AS(load_quiver_spec("/nonexistent/file.quiver"), ArgumentError);
}

TEST_CASE("polynomial serialization round trips") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6), deg(0, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    const QPoly p(c);
    CHECK(qpoly_from_json(Json::parse(qpoly_to_json(p).dump())) == p);
    CHECK(qpoly_from_csv(qpoly_to_csv(p)) == p);

    MPoly m(3);
    for (int t = 0; t < 5; ++t) m.add_term({unsigned(deg(rng)), unsigned(deg(rng)), unsigned(deg(rng))}, c.front() + t);
    const GPolynomial g(2, m);
    CHECK(gpoly_from_json(2, Json::parse(gpoly_to_json(g).dump())) == g);
    CHECK(gpoly_from_csv(2, gpoly_to_csv(g)) == g);
  }
  CHECK(qpoly_to_json(QPoly{0, 0, 0, 1, 0, 1}).dump() == R"([[5,"1"],[3,"1"]])");
  CHECK(qpoly_to_csv(QPoly::monomial(Rational(-1, 2), 1)) == "1:-1/2");
  CHECK(qpoly_from_csv("").is_zero());
  CHECK_THROWS_AS(qpoly_from_csv("3"), ParseError);
  CHECK_THROWS_AS(qpoly_from_csv("x:1"), ParseError);
  CHECK_THROWS_AS(qpoly_from_json(Json::parse(R"([[1,2]])")), ParseError);
  CHECK_THROWS_AS(gpoly_from_csv(2, "1.0:1"), ParseError);
}

TEST_CASE("report rendering") {
  auto make = [] {
    RunReport r;
    r.command = "kac test";
    r.inputs = {{"alpha", DimVector{1, 2}}};
    auto& t = r.table("values", {"k", "poly", "note"});
    t.add({EdgeVector(1, {2}), QPoly{0, 1, 1}, "a, b"});
    r.check("ok", true, "1", "1");
    r.check("bad", false, "2", "3");
    return r;
  };
  RunReport r = make();
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.all_passed());

  const auto json = lines(r.render(OutputFormat::kJson));
  REQUIRE(json.size() == 6);
  for (const auto& l : json) CHECK(Json::accept(l));
  const Json rec = Json::parse(json[1]);
  CHECK(qpoly_from_json(rec["poly"]) == QPoly{0, 1, 1});
  CHECK(Json::parse(json[4])["status"] == "fail");
  CHECK(Json::parse(json[5])["type"] == "timing");

  const std::string csv = r.render(OutputFormat::kCsv);
  CHECK(csv.find("values,2,2:1 1:1,\"a, b\"\n") != std::string::npos);
  CHECK(csv.find("check,bad,fail,2,3") != std::string::npos);

  const std::string table = r.render(OutputFormat::kTable);
  CHECK(table.find("q^2 + q") != std::string::npos);
  CHECK(table.find("1/2 checks passed") != std::string::npos);

  // Only the timing field depends on the run.
  RunReport again = make();
  again.wall_ms = 123.0;
  for (auto format : {OutputFormat::kJson, OutputFormat::kCsv}) {
    auto a = lines(r.render(format)), b = lines(again.render(format));
    CHECK(a.size() == b.size());
    CHECK(std::equal(a.begin(), a.end() - 1, b.begin()));
  }
}

TEST_CASE("option parsing helpers") {
  CHECK(parse_output_format("csv") == OutputFormat::kCsv);
  CHECK_THROWS_AS(parse_output_format("xml"), ArgumentError);
  CHECK(parse_verify_suite("mahler") == VerifySuite::kMahler);
  CHECK_THROWS_AS(parse_verify_suite("everything"), ArgumentError);
  CHECK(parse_verify_size("full") == VerifySize::kFull);
}

TEST_CASE("verify suites report their checks") {
  RunReport r;
  run_verify(VerifySuite::kQbinom, VerifySize::kQuick, 1, r);
  CHECK(!r.checks.empty());
  CHECK(r.all_passed());
  RunReport tables;
  run_verify(VerifySuite::kTables, VerifySize::kQuick, 2, tables);
  CHECK(tables.all_passed());
}
