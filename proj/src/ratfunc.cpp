#include "kac/ratfunc.hpp"

#include "kac/errors.hpp"
#include "zpoly.hpp"

namespace kac {

using detail::ZPoly;

namespace {

ZPoly primitive_copy(const ZPoly& p) {
  ZPoly r = p;
  detail::make_primitive(r);
  return r;
}

// num, den already coprime as polynomials: balance integer contents and make
// lead(den) positive.
void fix_contents(ZPoly& num, ZPoly& den) {
  if (num.empty()) {
    den = ZPoly{Integer(1)};
    return;
  }
  Integer cn = detail::content(num);
  Integer cd = detail::content(den);
  Integer g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : den) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Divide both by their common polynomial factor h (primitive) when nontrivial.
void cancel(ZPoly& num, ZPoly& den, const ZPoly& h) {
  if (h.size() <= 1) return;
  num = detail::divexact_z(num, h);
  den = detail::divexact_z(den, h);
}

void reduce(ZPoly& num, ZPoly& den) {
  detail::trim(num);
  detail::trim(den);
  if (num.empty()) {
    den = ZPoly{Integer(1)};
    return;
  }
  cancel(num, den, detail::gcd_z(primitive_copy(num), primitive_copy(den)));
  fix_contents(num, den);
}

ZPoly add_z(const ZPoly& a, const ZPoly& b, bool subtract) {
  ZPoly r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (subtract)
      r[i] -= b[i];
    else
      r[i] += b[i];
  }
  detail::trim(r);
  return r;
}

}  // namespace

RatFunc::RatFunc(const Rational& c) {
  if (c != 0) num_ = {c.get_num()};
  den_ = {c.get_den()};
}

RatFunc::RatFunc(const QPoly& p) {
  auto [scale, z] = detail::to_primitive_z(p);
  if (p.is_zero()) {
    den_ = {Integer(1)};
    return;
  }
  for (auto& c : z) c *= scale.get_num();
  num_ = std::move(z);
  den_ = {scale.get_den()};
}

RatFunc RatFunc::normalize(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw ArgumentError("rational function with zero denominator");
  RatFunc r;
  if (num.is_zero()) return r;
  auto [cn, zn] = detail::to_primitive_z(num);
  auto [cd, zd] = detail::to_primitive_z(den);
  cancel(zn, zd, detail::gcd_z(zn, zd));
  Rational c = cn / cd;  // lead(zd) > 0 already
  for (auto& x : zn) x *= c.get_num();
  for (auto& x : zd) x *= c.get_den();
  r.num_ = std::move(zn);
  r.den_ = std::move(zd);
  return r;
}

RatFunc RatFunc::q_power(long e) {
  RatFunc r;
  ZPoly mono(static_cast<std::size_t>(e >= 0 ? e : -e) + 1);
  mono.back() = 1;
  if (e >= 0) {
    r.num_ = std::move(mono);
  } else {
    r.num_ = {Integer(1)};
    r.den_ = std::move(mono);
  }
  return r;
}

QPoly RatFunc::num() const { return detail::from_z(num_); }
QPoly RatFunc::den() const { return detail::from_z(den_); }

std::optional<QPoly> RatFunc::as_polynomial() const {
  if (!is_polynomial()) return std::nullopt;
  return num() * Rational(Integer(1), den_[0]);
}

Rational RatFunc::operator()(const Rational& x) const {
  Rational d = den()(x);
  if (d == 0) throw ArgumentError("evaluation at a pole of " + to_string());
  return num()(x) / d;
}

RatFunc RatFunc::substitute_power(unsigned d) const {
  if (d == 1) return *this;
  return normalize(num().compose_power(d), den().compose_power(d));
}

RatFunc RatFunc::derivative() const {
  QPoly n = num(), dd = den();
  return normalize(n.derivative() * dd - n * dd.derivative(), dd * dd);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.size() == 1 && o.den_.size() == 1 && den_ == o.den_) {
    num_ = add_z(num_, o.num_, false);
    reduce(num_, den_);
    return *this;
  }
  ZPoly g = detail::gcd_z(primitive_copy(den_), primitive_copy(o.den_));
  ZPoly b1 = g.size() > 1 ? detail::divexact_z(den_, g) : den_;
  ZPoly d1 = g.size() > 1 ? detail::divexact_z(o.den_, g) : o.den_;
  ZPoly n = add_z(detail::mul_z(num_, d1), detail::mul_z(o.num_, b1), false);
  ZPoly d = detail::mul_z(b1, o.den_);
  if (n.empty()) {
    num_.clear();
    den_ = {Integer(1)};
    return *this;
  }
  if (g.size() > 1) cancel(n, d, detail::gcd_z(primitive_copy(n), g));
  fix_contents(n, d);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    num_.clear();
    den_ = {Integer(1)};
    return *this;
  }
  ZPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (d.size() > 1) cancel(a, d, detail::gcd_z(primitive_copy(a), primitive_copy(d)));
  if (b.size() > 1) cancel(c, b, detail::gcd_z(primitive_copy(c), primitive_copy(b)));
  num_ = detail::mul_z(a, c);
  den_ = detail::mul_z(b, d);
  fix_contents(num_, den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw ArgumentError("rational function division by zero");
  RatFunc inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  fix_contents(inv.num_, inv.den_);
  return *this *= inv;
}

RatFunc& RatFunc::operator*=(const Rational& c) {
  if (c == 0) {
    num_.clear();
    den_ = {Integer(1)};
    return *this;
  }
  for (auto& x : num_) x *= c.get_num();
  for (auto& x : den_) x *= c.get_den();
  fix_contents(num_, den_);
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return as_polynomial()->to_string();
  return "(" + num().to_string() + ")/(" + den().to_string() + ")";
}

Rational ratfunc_limit_with_pole_cancellation(const RatFunc& f, int e) {
  if (f.is_zero()) return 0;
  QPoly n = f.num(), d = f.den();
  const long vn = vanishing_order_at_1(n);
  const long vd = vanishing_order_at_1(d);
  const long order = vn - vd + e;
  if (order < 0)
    throw ArgumentError("pole of order " + std::to_string(-order) + " at q = 1 survives cancellation");
  if (order > 0) return 0;
  // Leading (q-1)-Taylor coefficients of numerator and denominator.
  Rational tn = n.taylor_shift_one().coeff(static_cast<std::size_t>(vn));
  Rational td = d.taylor_shift_one().coeff(static_cast<std::size_t>(vd));
  return tn / td;
}

}  // namespace kac
