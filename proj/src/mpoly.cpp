#include "kac/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "kac/errors.hpp"

namespace kac {

namespace {

unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

MPoly MPoly::constant(std::size_t arity, const Rational& c) {
  MPoly p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArgumentError("variable index out of range");
  Exponent e(arity, 0);
  e[index] = 1;
  return monomial(e, Rational(1));
}

MPoly MPoly::monomial(const Exponent& e, const Rational& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

long MPoly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, degree_of(e));
  return d;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != arity_) throw ArgumentError("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::homogeneous_part(unsigned d) const {
  MPoly r(arity_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) == d) r.terms_.emplace(e, c);
  return r;
}

MPoly MPoly::truncated(unsigned d) const {
  MPoly r(arity_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) <= d) r.terms_.emplace(e, c);
  return r;
}

MPoly MPoly::mul_truncated(const MPoly& a, const MPoly& b, unsigned cap) {
  if (a.arity_ != b.arity_) throw ArgumentError("arity mismatch in product");
  MPoly r(a.arity_);
  Exponent e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    const unsigned da = degree_of(ea);
    if (da > cap) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + degree_of(eb) > cap) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  return MPoly::mul_truncated(a, b, static_cast<unsigned>(-1));
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw ArgumentError("evaluation point arity mismatch");
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < arity_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.arity_ != arity_) throw ArgumentError("arity mismatch in sum");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.arity_ != arity_) throw ArgumentError("arity mismatch in difference");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    const unsigned dx = degree_of(x.first), dy = degree_of(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += kac::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += kac::to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace kac
