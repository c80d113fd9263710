#include "kac/qpoly.hpp"

#include <algorithm>

#include "kac/errors.hpp"
#include "zpoly.hpp"

namespace kac {

namespace {
const Rational kZero;
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::geometric(std::size_t len) { return QPoly(std::vector<Rational>(len, Rational(1))); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& QPoly::coeff(std::size_t e) const { return e < c_.size() ? c_[e] : kZero; }

const Rational& QPoly::lead() const { return c_.empty() ? kZero : c_.back(); }

std::size_t QPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

bool QPoly::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return is_integer(r); });
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::compose_power(unsigned d) const {
  if (d == 0) return constant((*this)(Rational(1)));
  if (d == 1 || c_.size() <= 1) return *this;
  std::vector<Rational> v((c_.size() - 1) * d + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * d] = c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::shifted(std::size_t e) const {
  if (is_zero() || e == 0) return *this;
  std::vector<Rational> v(e);
  v.insert(v.end(), c_.begin(), c_.end());
  QPoly r;
  r.c_ = std::move(v);
  return r;
}

QPoly QPoly::taylor_shift_one() const {
  // Repeated synthetic division by (q - 1).
  std::vector<Rational> a = c_;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i > k; --i) a[i - 1] += a[i];
  return QPoly(std::move(a));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (a.has_integer_coefficients() && b.has_integer_coefficients()) {
    std::vector<Integer> acc(n);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const mpz_srcptr ai = a.c_[i].get_num_mpz_t();
      if (mpz_sgn(ai) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(acc[i + j].get_mpz_t(), ai, b.c_[j].get_num_mpz_t());
    }
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = Rational(acc[i]);
    return QPoly(std::move(out));
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string QPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += kac::to_string(mag);
      continue;
    }
    if (mag != 1) out += kac::to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

QPoly pow(const QPoly& p, unsigned e) {
  QPoly result = QPoly::constant(1);
  QPoly base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ArgumentError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  const long db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.lead();
  for (long k = a.degree() - db; k >= 0; --k) {
    Rational c = r[static_cast<std::size_t>(k + db)] * inv_lead;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k)] = c;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * b.coeff(static_cast<std::size_t>(j));
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quo)), QPoly(std::move(r))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division: remainder " + r.to_string());
  return q;
}

std::pair<Rational, QPoly> content_primitive(const QPoly& p) {
  if (p.is_zero()) return {Rational(0), QPoly{}};
  auto [c, z] = detail::to_primitive_z(p);
  return {c, detail::from_z(z)};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return content_primitive(b).second;
  if (b.is_zero()) return content_primitive(a).second;
  auto za = detail::to_primitive_z(a).second;
  auto zb = detail::to_primitive_z(b).second;
  return detail::from_z(detail::gcd_z(std::move(za), std::move(zb)));
}

Rational qpoly_taylor_at_1(const QPoly& p, unsigned t) {
  // d^t/dq^t q^e at 1 is the falling factorial e(e-1)...(e-t+1).
  Rational acc;
  const auto c = p.coefficients();
  for (std::size_t e = t; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    Integer ff = 1;
    for (unsigned i = 0; i < t; ++i) ff *= static_cast<unsigned long>(e - i);
    acc += c[e] * Rational(ff);
  }
  return acc;
}

unsigned vanishing_order_at_1(const QPoly& p) {
  if (p.is_zero()) throw ArgumentError("vanishing order of the zero polynomial is unbounded");
  QPoly shifted = p.taylor_shift_one();
  return static_cast<unsigned>(shifted.low_degree());
}

}  // namespace kac
