#include "zpoly.hpp"

#include "kac/errors.hpp"

namespace kac::detail {

std::pair<Rational, ZPoly> to_primitive_z(const QPoly& p) {
  const auto c = p.coefficients();
  Integer lcm_den = 1;
  for (const auto& x : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  ZPoly z(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer t = lcm_den / c[i].get_den();
    z[i] = c[i].get_num() * t;
  }
  Integer g = content(z);
  if (!z.empty() && z.back() < 0) g = -g;
  if (g != 1 && g != 0)
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  Rational scale(g, lcm_den);
  scale.canonicalize();
  return {scale, std::move(z)};
}

QPoly from_z(const ZPoly& z) {
  std::vector<Rational> v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) v[i] = Rational(z[i]);
  return QPoly(std::move(v));
}

ZPoly prem(ZPoly a, const ZPoly& b) {
  const long db = static_cast<long>(b.size()) - 1;
  const Integer& lb = b.back();
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    const long da = static_cast<long>(a.size()) - 1;
    Integer la = a.back();
    // a <- lb * a - la * q^(da-db) * b
    for (auto& x : a) x *= lb;
    for (long j = 0; j <= db; ++j)
      mpz_submul(a[static_cast<std::size_t>(j + da - db)].get_mpz_t(), la.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    trim(a);
    // Keep coefficient growth in check; content removal does not change the gcd.
    make_primitive(a);
  }
  return a;
}

ZPoly gcd_z(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return ZPoly{Integer(1)};
    ZPoly r = prem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

ZPoly divexact_z(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw ArgumentError("polynomial division by zero");
  if (a.size() < b.size()) {
    if (a.empty()) return {};
    throw InvariantError("inexact integer polynomial division");
  }
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  const bool unit = b.back() == 1;
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    Integer c;
    if (unit) {
      c = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()))
        throw InvariantError("inexact integer polynomial division");
      mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    }
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[k] = std::move(c);
  }
  trim(r);
  if (!r.empty()) throw InvariantError("inexact integer polynomial division");
  trim(q);
  return q;
}

ZPoly mul_z(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(out);
  return out;
}

}  // namespace kac::detail
