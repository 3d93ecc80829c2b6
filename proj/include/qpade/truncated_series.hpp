#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "qpade/bigrat.hpp"
#include "qpade/errors.hpp"
#include "qpade/polynomial.hpp"
#include "qpade/rational_function.hpp"

namespace qpade {

/// Expansion variable of a truncated series.
enum class SeriesVar { z, z_inverse, z_minus_one, s_inverse };

/// Exact truncated Laurent series sum_{e >= first} c_e x^e + O(x^trunc).
/// Coefficients are stored densely for first <= e < trunc; coefficients at or
/// beyond the truncation order are unknown and never reported.
template <class F>
class TruncatedSeries {
 public:
  TruncatedSeries(SeriesVar var, long first, std::vector<F> coeffs, long trunc)
      : var_(var), first_(first), trunc_(trunc), coeffs_(std::move(coeffs)) {
    if (trunc_ < first_) first_ = trunc_;
    coeffs_.resize(static_cast<std::size_t>(trunc_ - first_), F(0));
  }

  /// Series with all coefficients zero below trunc.
  static TruncatedSeries zero(SeriesVar var, long trunc) { return TruncatedSeries(var, trunc, {}, trunc); }

  /// Finite polynomial viewed as a series known up to (excluding) trunc.
  static TruncatedSeries from_poly(SeriesVar var, const Poly<F>& p, long trunc) {
    std::vector<F> c;
    for (long e = 0; e < trunc; ++e) c.push_back(p.coeff(static_cast<std::size_t>(e)));
    return TruncatedSeries(var, 0, std::move(c), std::max(trunc, 0L));
  }

  SeriesVar variable() const { return var_; }
  long first() const { return first_; }
  long truncation() const { return trunc_; }

  /// Coefficient of x^e; throws ArithmeticError when e >= truncation order.
  F coefficient(long e) const {
    if (e >= trunc_) {
      throw ArithmeticError("coefficient at exponent " + std::to_string(e) +
                            " is beyond truncation order " + std::to_string(trunc_));
    }
    if (e < first_) return F(0);
    return coeffs_[static_cast<std::size_t>(e - first_)];
  }

  /// Smallest exponent with a known nonzero coefficient, or trunc if none.
  long valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!qpade::is_zero(coeffs_[i])) return first_ + static_cast<long>(i);
    }
    return trunc_;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const long first = std::min(a.first_, b.first_);
    const long trunc = std::min(a.trunc_, b.trunc_);
    std::vector<F> c;
    for (long e = first; e < trunc; ++e) c.push_back(F(a.coefficient(e) + b.coefficient(e)));
    return TruncatedSeries(a.var_, first, std::move(c), trunc);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const F& k) {
    TruncatedSeries r = a;
    for (auto& c : r.coeffs_) c = c * k;
    return r;
  }

  /// Product; known exponents are those below min(trunc_a + first_b, trunc_b + first_a).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const long first = a.first_ + b.first_;
    const long trunc = std::min(a.trunc_ + b.first_, b.trunc_ + a.first_);
    std::vector<F> c(static_cast<std::size_t>(std::max(trunc - first, 0L)), F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (qpade::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j) {
        if (qpade::is_zero(b.coeffs_[j])) continue;
        c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return TruncatedSeries(a.var_, first, std::move(c), trunc);
  }

  TruncatedSeries pow(unsigned e) const {
    if (e == 0) return TruncatedSeries(var_, 0, {F(1)}, std::max(trunc_ - first_, 1L));
    TruncatedSeries r = *this;
    for (unsigned i = 1; i < e; ++i) r = r * *this;
    return r;
  }

  /// Multiplicative inverse; requires a known nonzero coefficient.
  TruncatedSeries inverse() const {
    const long v = valuation();
    if (v >= trunc_) throw ArithmeticError("inverse of a series with no known nonzero coefficient");
    const long len = trunc_ - v;
    const F lead = coefficient(v);
    std::vector<F> inv(static_cast<std::size_t>(len), F(0));
    inv[0] = F(1) / lead;
    for (long m = 1; m < len; ++m) {
      F acc(0);
      for (long i = 1; i <= m; ++i) acc = acc + coefficient(v + i) * inv[static_cast<std::size_t>(m - i)];
      inv[static_cast<std::size_t>(m)] = F(-acc / lead);
    }
    return TruncatedSeries(var_, -v, std::move(inv), -v + len);
  }

  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b.inverse();
  }

 private:
  SeriesVar var_;
  long first_;
  long trunc_;
  std::vector<F> coeffs_;
};

/// log(1/z) expanded at z = 1: sum_{m >= 1} (-1)^m (z-1)^m / m + O((z-1)^order).
TruncatedSeries<BigRat> log_series_at_one(long order);

}  // namespace qpade
