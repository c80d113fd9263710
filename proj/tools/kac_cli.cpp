#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kac/errors.hpp"
#include "kac/graph_counts.hpp"
#include "kac/hua.hpp"
#include "kac/leading.hpp"
#include "kac/mahler.hpp"
#include "kac/quiver_spec.hpp"
#include "kac/report.hpp"
#include "kac/verify.hpp"

using namespace kac;

namespace {

std::vector<unsigned> parse_list(const std::string& text, const std::string& what) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || item.front() == '-')
      throw ArgumentError(what + ": '" + item + "' is not a nonnegative integer");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw ArgumentError(what + " is empty");
  return out;
}

DimVector parse_dims(const std::string& text, std::size_t n, const std::string& what) {
  DimVector d(parse_list(text, what));
  if (n != 0 && d.size() != n)
    throw ArgumentError(what + " has " + std::to_string(d.size()) + " entries, expected " + std::to_string(n));
  return d;
}

struct QuiverInput {
  std::string inline_spec;
  std::string file;

  QuiverSpec resolve() const {
    if (!inline_spec.empty() && !file.empty()) throw ArgumentError("give either --quiver or --spec, not both");
    if (!file.empty()) return load_quiver_spec(file);
    if (!inline_spec.empty()) return parse_quiver_spec(inline_spec);
    throw ArgumentError("a quiver is required (--quiver or --spec)");
  }
};

std::string join_args(int argc, char** argv) {
  std::string s = "kac";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

struct Options {
  std::string format = "table";
  unsigned threads = 1;
  QuiverInput quiver;
  std::string alpha_text;
  std::string ell_text;
  std::string box_text;
  std::size_t n = 0;
  unsigned s = 0;
  unsigned budget = 0;
  unsigned cap = 0;
  unsigned derivative_range = 0;
  bool oracle = false;
  bool fit = false;
  bool no_extend = false;
  bool check_derivative = false;
  std::string suite = "all";
  std::string size = "quick";
};

void cmd_kac(const Options& o, RunReport& r) {
  const QuiverSpec spec = o.quiver.resolve();
  const DimVector alpha = parse_dims(o.alpha_text, spec.n, "--alpha");
  if (alpha.is_zero()) throw ArgumentError("--alpha must be nonzero");
  r.inputs = {{"quiver", spec.to_string()}, {"alpha", alpha}, {"s", o.s}};
  const Quiver q = spec.quiver();
  const QPoly a = kac_polynomial(q, alpha);
  r.table("kac", {"alpha", "degree", "polynomial"}).add({alpha, a.degree(), a});
  if (o.s > 0) {
    auto& t = r.table("derivatives_at_1", {"s", "value"});
    for (unsigned s = 0; s <= o.s; ++s) t.add({s, qpoly_taylor_at_1(a, s)});
  }
}

void cmd_graphs(const Options& o, RunReport& r) {
  const DimVector ell = parse_dims(o.ell_text, o.n, "--ell");
  r.inputs = {{"n", static_cast<unsigned>(ell.size())}, {"ell", ell}, {"budget", o.budget}};
  const GraphCountTable table = connected_counts(ell, o.budget);
  auto& t = r.table("connected_counts", {"k", "count"});
  for (const auto& [k, c] : table.counts) t.add({k, c});
  if (o.oracle) {
    const GraphCountTable brute = connected_counts_bruteforce(ell, o.budget);
    r.check("series = brute force", brute == table, std::to_string(brute.counts.size()) + " nonzero counts",
            std::to_string(table.counts.size()) + " nonzero counts");
  }
}

void cmd_leading(const Options& o, RunReport& r) {
  const DimVector alpha = parse_dims(o.alpha_text, o.n, "--alpha");
  const std::size_t n = alpha.size();
  if (alpha.is_zero()) throw ArgumentError("--alpha must be nonzero");
  const unsigned degree = o.s + alpha.total() - 1;
  r.inputs = {{"n", static_cast<unsigned>(n)}, {"alpha", alpha}, {"s", o.s}};
  const LeadingComponent lc = leading_component(n, alpha, o.s);
  auto& t = r.table("leading_component", {"exponent", "coefficient"});
  for (const auto& [ell, c] : lc.terms) t.add({ell, c});
  if (o.fit) {
    const unsigned cap = o.cap ? o.cap : degree;
    r.inputs.emplace_back("degree_cap", cap);
    const GPolynomial fit = fit_polynomial_in_g(n, alpha, o.s, cap, o.threads);
    r.table("fit", {"polynomial"}).add({fit});
    auto& b = r.table("fit_binomial_basis", {"k", "coefficient"});
    for (const auto& [k, c] : fit.binomial_basis()) b.add({k, c});
    const bool ok = fit.top_homogeneous() == lc.terms && fit.total_degree() == static_cast<long>(degree);
    r.check("leading component = top homogeneous part of fit", ok, lc.as_polynomial(n).to_string(),
            GPolynomial(n, fit.monomials().homogeneous_part(degree)).to_string());
  }
}

void cmd_mahler(const Options& o, RunReport& r) {
  const DimVector alpha = parse_dims(o.alpha_text, o.n, "--alpha");
  const std::size_t n = alpha.size();
  if (alpha.is_zero()) throw ArgumentError("--alpha must be nonzero");
  EdgeVector box = mahler_default_box(n, alpha);
  if (!o.box_text.empty()) {
    auto entries = parse_list(o.box_text, "--box");
    if (entries.size() != pair_count(n))
      throw ArgumentError("--box needs " + std::to_string(pair_count(n)) + " entries");
    box = EdgeVector(n, entries);
  }
  r.inputs = {{"n", static_cast<unsigned>(n)}, {"alpha", alpha}, {"box", box}, {"extend", !o.no_extend}};
  const MahlerTable table = mahler_table(n, alpha, box, !o.no_extend, o.threads);
  r.inputs.emplace_back("final_box", table.box);
  auto& t = r.table("mahler_coefficients", {"k", "a(q)", "a(1)"});
  for (const auto& [k, a] : table.coeffs) t.add({k, a, a(Rational(1))});
  r.check("reconstruction on box and spot checks", true);

  if (o.check_derivative) {
    auto& strict = r.table("coefficient_derivative", {"k", "required_order", "actual_order", "expected", "actual"});
    auto& boundary =
        r.table("coefficient_derivative_boundary", {"k", "required_order", "actual_order", "expected", "actual"});
    for (unsigned total = alpha.total(); total <= alpha.total() + o.derivative_range; ++total)
      for (const EdgeVector& k : edge_vectors_of_total(n, total)) {
        const auto c = check_coefficient_derivative(n, alpha, k);
        const Cell order = c.actual_order ? Cell(*c.actual_order) : Cell("inf");
        (c.boundary ? boundary : strict).add({k, c.required_order, order, c.expected, c.actual});
        r.check(std::string(c.boundary ? "boundary " : "") + "coefficient derivative k=" + k.to_string(), c.passed,
                c.expected.get_str(), c.actual.get_str());
      }
  }
}

void cmd_verify(const Options& o, RunReport& r) {
  r.inputs = {{"suite", o.suite}, {"size", o.size}};
  run_verify(parse_verify_suite(o.suite), parse_verify_size(o.size), o.threads, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac polynomials of quivers: Hua's formula, graph counts, leading coefficients, Mahler expansions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  auto add_quiver = [&](CLI::App* c) {
    c->add_option("--quiver", o.quiver.inline_spec, "Inline quiver, e.g. \"n=1; 1-1:3\"");
    c->add_option("--spec", o.quiver.file, "Quiver spec file")->check(CLI::ExistingFile);
  };

  auto* kac = app.add_subcommand("kac", "Kac polynomial A(alpha, q) and derivatives at q = 1");
  add_quiver(kac);
  kac->add_option("--alpha", o.alpha_text, "Dimension vector, comma separated")->required();
  kac->add_option("--s", o.s, "Highest derivative order reported")->capture_default_str();

  auto* graphs = app.add_subcommand("graphs", "Connected graph counts G_k^ell");
  graphs->add_option("--n", o.n, "Number of vertex classes (defaults to the length of --ell)");
  graphs->add_option("--ell", o.ell_text, "Class sizes, comma separated")->required();
  graphs->add_option("--budget", o.budget, "Largest total edge count")->required();
  graphs->add_flag("--oracle", o.oracle, "Also enumerate edge subsets and compare");

  auto* leading = app.add_subcommand("leading", "Leading component in g of d^s/dq^s A at q = 1");
  leading->add_option("--n", o.n, "Number of vertices (defaults to the length of --alpha)");
  leading->add_option("--alpha", o.alpha_text, "Dimension vector, comma separated")->required();
  leading->add_option("--s", o.s, "Derivative order")->capture_default_str();
  leading->add_flag("--fit", o.fit, "Also interpolate over g and compare");
  leading->add_option("--cap", o.cap, "Degree cap for --fit (default s + |alpha| - 1)");

  auto* mahler = app.add_subcommand("mahler", "Coefficients of A in the q-binomial basis in g");
  mahler->add_option("--n", o.n, "Number of vertices (defaults to the length of --alpha)");
  mahler->add_option("--alpha", o.alpha_text, "Dimension vector, comma separated")->required();
  mahler->add_option("--box", o.box_text, "Extraction box, one entry per pair (i<=j)");
  mahler->add_flag("--no-extend", o.no_extend, "Fail instead of enlarging the box");
  mahler->add_flag("--check-derivative", o.check_derivative, "Check the derivative law for |alpha| <= |k| <= |alpha| + range");
  mahler->add_option("--range", o.derivative_range, "Range for --check-derivative")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"tables", "graphs", "qbinom", "mahler", "theorems", "all"}))->capture_default_str();
  verify->add_option("--size", o.size)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunReport report;
  report.command = join_args(argc, argv);
  try {
    const OutputFormat format = parse_output_format(o.format);
    const auto start = std::chrono::steady_clock::now();
    if (*kac) cmd_kac(o, report);
    else if (*graphs) cmd_graphs(o, report);
    else if (*leading) cmd_leading(o, report);
    else if (*mahler) cmd_mahler(o, report);
    else if (*verify) cmd_verify(o, report);
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.render(format);
    return report.all_passed() ? 0 : 1;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
