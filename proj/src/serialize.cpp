#include "kac/serialize.hpp"

#include <charconv>
#include <sstream>

#include "kac/errors.hpp"

namespace kac {

namespace {

unsigned parse_exponent(std::string_view text, const std::string& field) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(1, field, "bad exponent '" + std::string(text) + "'");
  return v;
}

Rational parse_coefficient(const std::string& text, const std::string& field) {
  try {
    return parse_rational(text);
  } catch (const ArgumentError&) {
    throw ParseError(1, field, "bad coefficient '" + text + "'");
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto pos = text.find(sep);
    if (pos != 0) out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

std::string join_exponent(const Exponent& e) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) s += (v ? "." : "") + std::to_string(e[v]);
  return s;
}

}  // namespace

Json qpoly_to_json(const QPoly& p) {
  Json out = Json::array();
  for (long d = p.degree(); d >= 0; --d)
    if (const Rational& c = p.coeff(d); c != 0) out.push_back(Json::array({d, c.get_str()}));
  return out;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError(1, "terms", "expected an array of [exponent, coefficient] pairs");
  std::vector<Rational> c;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned() || !term[1].is_string())
      throw ParseError(1, "terms", "bad term " + term.dump());
    const std::size_t e = term[0].get<std::size_t>();
    if (c.size() <= e) c.resize(e + 1);
    c[e] += parse_coefficient(term[1].get<std::string>(), "terms");
  }
  return QPoly(std::move(c));
}

std::string qpoly_to_csv(const QPoly& p) {
  std::string s;
  for (long d = p.degree(); d >= 0; --d)
    if (const Rational& c = p.coeff(d); c != 0) s += (s.empty() ? "" : " ") + std::to_string(d) + ":" + c.get_str();
  return s;
}

QPoly qpoly_from_csv(std::string_view text) {
  std::vector<Rational> c;
  for (std::string_view term : split(text, ' ')) {
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw ParseError(1, "terms", "expected exponent:coefficient");
    const unsigned e = parse_exponent(term.substr(0, colon), "terms");
    if (c.size() <= e) c.resize(e + 1);
    c[e] += parse_coefficient(std::string(term.substr(colon + 1)), "terms");
  }
  return QPoly(std::move(c));
}

Json gpoly_to_json(const GPolynomial& p) {
  Json out = Json::array();
  const auto& terms = p.monomials().terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) out.push_back(Json::array({it->first, it->second.get_str()}));
  return out;
}

GPolynomial gpoly_from_json(std::size_t n, const Json& j) {
  if (!j.is_array()) throw ParseError(1, "terms", "expected an array of [exponents, coefficient] pairs");
  MPoly p(pair_count(n));
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array() || term[0].size() != pair_count(n) ||
        !term[1].is_string())
      throw ParseError(1, "terms", "bad term " + term.dump());
    Exponent e;
    for (const auto& x : term[0]) {
      if (!x.is_number_unsigned()) throw ParseError(1, "terms", "bad exponent " + x.dump());
      e.push_back(x.get<unsigned>());
    }
    p.add_term(e, parse_coefficient(term[1].get<std::string>(), "terms"));
  }
  return GPolynomial(n, std::move(p));
}

std::string gpoly_to_csv(const GPolynomial& p) {
  std::string s;
  const auto& terms = p.monomials().terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    s += (s.empty() ? "" : " ") + join_exponent(it->first) + ":" + it->second.get_str();
  return s;
}

GPolynomial gpoly_from_csv(std::size_t n, std::string_view text) {
  MPoly p(pair_count(n));
  for (std::string_view term : split(text, ' ')) {
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw ParseError(1, "terms", "expected exponents:coefficient");
    Exponent e;
    for (std::string_view x : split(term.substr(0, colon), '.')) e.push_back(parse_exponent(x, "terms"));
    if (e.size() != pair_count(n)) throw ParseError(1, "terms", "wrong number of exponents in '" + std::string(term) + "'");
    p.add_term(e, parse_coefficient(std::string(term.substr(colon + 1)), "terms"));
  }
  return GPolynomial(n, std::move(p));
}

}  // namespace kac
