#pragma once

// Integer-coefficient polynomial helpers shared by QPoly and RatFunc. Not part
// of the public interface.

#include <utility>
#include <vector>

#include "kac/qpoly.hpp"

namespace kac::detail {

using ZPoly = std::vector<Integer>;  // low to high, trimmed

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// p = c * Z with Z primitive integer, lead(Z) > 0, c > 0 when lead(p) > 0.
std::pair<Rational, ZPoly> to_primitive_z(const QPoly& p);

QPoly from_z(const ZPoly& z);

// Pseudo-remainder of a by b (lead(b)^(deg a - deg b + 1) * a mod b).
ZPoly prem(ZPoly a, const ZPoly& b);

// Primitive gcd with positive leading coefficient; inputs must be primitive.
ZPoly gcd_z(ZPoly a, ZPoly b);

// Exact division of integer polynomials; quotient must lie in Z[q].
ZPoly divexact_z(const ZPoly& a, const ZPoly& b);

ZPoly mul_z(const ZPoly& a, const ZPoly& b);

}  // namespace kac::detail
