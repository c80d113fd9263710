#include "kac/qcomb.hpp"

#include <vector>

#include "kac/errors.hpp"
#include "kac/ratfunc.hpp"

namespace kac {

Integer stirling2(unsigned l, unsigned k) {
  if (k > l) return 0;
  // Row-by-row recurrence S(l,k) = k S(l-1,k) + S(l-1,k-1).
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;
  for (unsigned r = 1; r <= l; ++r) {
    for (unsigned c = std::min(r, k); c >= 1; --c) row[c] = static_cast<unsigned long>(c) * row[c] + row[c - 1];
    row[0] = 0;
  }
  return row[k];
}

QPoly qbinom(unsigned b, unsigned k) {
  if (k > b) return {};
  QPoly acc = QPoly::constant(1);
  for (unsigned i = 1; i <= k; ++i)
    acc = exact_div(acc * QPoly::geometric(b - i + 1), QPoly::geometric(i));
  return acc;
}

BPoly interpolate_consecutive(long first_node, std::span<const Rational> values) {
  std::vector<Rational> diff(values.begin(), values.end());
  const std::size_t n = diff.size();
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t j = n - 1; j >= r; --j) diff[j] -= diff[j - 1];
  // sum_j diff[j] * C(b - first_node, j)
  QPoly result;
  QPoly basis = QPoly::constant(1);
  for (std::size_t j = 0; j < n; ++j) {
    result += basis * diff[j];
    // C(x, j+1) = C(x, j) * (x - j) / (j + 1), x = b - first_node
    basis *= QPoly{-(first_node + static_cast<long>(j)), 1};
    basis *= Rational(1, static_cast<unsigned long>(j + 1));
  }
  return BPoly(std::move(result));
}

BPoly qbinom_derivative_poly(unsigned k, unsigned t) {
  std::vector<Rational> values;
  for (unsigned b = 0; b <= k + t; ++b) values.push_back(qpoly_taylor_at_1(qbinom(b, k), t));
  return interpolate_consecutive(0, values);
}

Rational ratio_derivative_value(unsigned i, unsigned m, unsigned b) {
  if (i == 0) throw ArgumentError("ratio_derivative needs i >= 1");
  if (b + 1 < i) throw ArgumentError("ratio_derivative needs b >= i - 1");
  RatFunc f = RatFunc::normalize(QPoly::geometric(b + 1 - i), QPoly::geometric(i));
  for (unsigned r = 0; r < m; ++r) f = f.derivative();
  return f(Rational(1));
}

BPoly ratio_derivative_poly(unsigned i, unsigned m) {
  if (i == 0) throw ArgumentError("ratio_derivative needs i >= 1");
  std::vector<Rational> values;
  for (unsigned b = i - 1; b <= i + m; ++b) values.push_back(ratio_derivative_value(i, m, b));
  return interpolate_consecutive(static_cast<long>(i) - 1, values);
}

}  // namespace kac
