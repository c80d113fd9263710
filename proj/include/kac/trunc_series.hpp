#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "kac/bigrational.hpp"
#include "kac/errors.hpp"

namespace kac {

/// Multivariate power series truncated to the box beta <= bound
/// (componentwise). Coefficients live in a ring C supporting +, -, *, ==
/// and scaling by Rational; zero and one are supplied because some
/// coefficient rings (MPoly) carry an arity.
template <class C>
class TruncSeries {
 public:
  TruncSeries(std::vector<unsigned> bound, C zero, C one)
      : bound_(std::move(bound)), zero_(std::move(zero)), one_(std::move(one)) {
    stride_.assign(bound_.size(), 1);
    std::size_t total = 1;
    for (std::size_t i = bound_.size(); i-- > 0;) {
      stride_[i] = total;
      total *= bound_[i] + 1;
    }
    cells_.reserve(total);
    degree_.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<unsigned> beta(bound_.size());
      std::size_t rest = idx;
      for (std::size_t i = 0; i < bound_.size(); ++i) {
        beta[i] = static_cast<unsigned>(rest / stride_[i]);
        rest %= stride_[i];
      }
      degree_.push_back(std::accumulate(beta.begin(), beta.end(), 0u));
      cells_.push_back(std::move(beta));
    }
    coeffs_.assign(total, zero_);
  }

  const std::vector<unsigned>& bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const C& zero() const noexcept { return zero_; }
  const C& one() const noexcept { return one_; }

  bool contains(std::span<const unsigned> beta) const {
    if (beta.size() != bound_.size()) return false;
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] > bound_[i]) return false;
    return true;
  }

  std::size_t flat(std::span<const unsigned> beta) const {
    if (!contains(beta)) throw ArgumentError("exponent outside the truncation box");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) idx += beta[i] * stride_[i];
    return idx;
  }
  const std::vector<unsigned>& exponent(std::size_t idx) const { return cells_[idx]; }
  unsigned total_degree(std::size_t idx) const { return degree_[idx]; }

  const C& operator[](std::size_t idx) const { return coeffs_[idx]; }
  C& operator[](std::size_t idx) { return coeffs_[idx]; }
  const C& at(std::span<const unsigned> beta) const { return coeffs_[flat(beta)]; }
  C& at(std::span<const unsigned> beta) { return coeffs_[flat(beta)]; }

  /// gamma <= beta componentwise, for flat indices of this box.
  bool below(std::size_t gamma, std::size_t beta) const {
    const auto& g = cells_[gamma];
    const auto& b = cells_[beta];
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > b[i]) return false;
    return true;
  }
  /// Flat index of beta - gamma; valid when below(gamma, beta).
  std::size_t minus(std::size_t beta, std::size_t gamma) const { return beta - gamma; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!(c == zero_)) return false;
    return true;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<unsigned> bound_;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<unsigned>> cells_;
  std::vector<unsigned> degree_;
  std::vector<C> coeffs_;
  C zero_;
  C one_;
};

struct NoTrim {
  template <class C>
  void operator()(C&) const {}
};

template <class C, class Trim = NoTrim>
TruncSeries<C> series_mul(const TruncSeries<C>& a, const TruncSeries<C>& b, Trim trim = {}) {
  if (a.bound() != b.bound()) throw ArgumentError("series bounds differ");
  TruncSeries<C> r(a.bound(), a.zero(), a.one());
  for (std::size_t beta = 0; beta < r.size(); ++beta) {
    C acc = a.zero();
    for (std::size_t gamma = 0; gamma <= beta; ++gamma) {
      if (!a.below(gamma, beta) || a[gamma] == a.zero()) continue;
      const C& other = b[r.minus(beta, gamma)];
      if (other == b.zero()) continue;
      acc = acc + a[gamma] * other;
    }
    trim(acc);
    r[beta] = std::move(acc);
  }
  return r;
}

/// log(s) as the alternating sum of (s - 1)^m / m, stopping once the power
/// vanishes inside the box.
template <class C, class Trim = NoTrim>
TruncSeries<C> series_log(const TruncSeries<C>& s, Trim trim = {}) {
  if (!(s[0] == s.one())) throw ArgumentError("logarithm of a series whose constant term is not 1");
  TruncSeries<C> u = s;
  u[0] = s.zero();
  TruncSeries<C> acc(s.bound(), s.zero(), s.one());
  TruncSeries<C> power = u;
  for (long m = 1; !power.is_zero(); ++m) {
    const Rational w(m % 2 == 1 ? 1 : -1, m);
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (!(power[i] == s.zero())) acc[i] = acc[i] + power[i] * w;
    power = series_mul(power, u, trim);
  }
  return acc;
}

/// log(s) by the Euler-operator recurrence
/// |b| L_b = |b| s_b - sum_{0 < g < b} |g| L_g s_{b-g}.
template <class C, class Trim = NoTrim>
TruncSeries<C> series_log_recurrence(const TruncSeries<C>& s, Trim trim = {}) {
  if (!(s[0] == s.one())) throw ArgumentError("logarithm of a series whose constant term is not 1");
  TruncSeries<C> log(s.bound(), s.zero(), s.one());
  for (std::size_t beta = 1; beta < s.size(); ++beta) {
    C acc = s.zero();
    for (std::size_t gamma = 1; gamma < beta; ++gamma) {
      if (!s.below(gamma, beta) || log[gamma] == s.zero()) continue;
      const C& rest = s[s.minus(beta, gamma)];
      if (rest == s.zero()) continue;
      acc = acc + log[gamma] * rest * Rational(s.total_degree(gamma));
    }
    trim(acc);
    C value = s[beta] - acc * Rational(1, s.total_degree(beta));
    trim(value);
    log[beta] = std::move(value);
  }
  return log;
}

/// exp(s) for s with zero constant term, by |b| E_b = sum_{0 < g <= b} |g| s_g E_{b-g}.
template <class C, class Trim = NoTrim>
TruncSeries<C> series_exp(const TruncSeries<C>& s, Trim trim = {}) {
  if (!(s[0] == s.zero())) throw ArgumentError("exponential of a series with nonzero constant term");
  TruncSeries<C> e(s.bound(), s.zero(), s.one());
  e[0] = s.one();
  for (std::size_t beta = 1; beta < s.size(); ++beta) {
    C acc = s.zero();
    for (std::size_t gamma = 1; gamma <= beta; ++gamma) {
      if (!s.below(gamma, beta) || s[gamma] == s.zero()) continue;
      const C& rest = e[e.minus(beta, gamma)];
      if (rest == s.zero()) continue;
      acc = acc + s[gamma] * rest * Rational(s.total_degree(gamma));
    }
    C value = acc * Rational(1, s.total_degree(beta));
    trim(value);
    e[beta] = std::move(value);
  }
  return e;
}

}  // namespace kac
