#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qpade/bigrat.hpp"
#include "qpade/errors.hpp"
#include "qpade/rational_function.hpp"

namespace qpade {

enum class Variable { s, z };

inline const char* variable_name(Variable v) { return v == Variable::s ? "s" : "z"; }

inline std::string coefficient_string(const BigRat& c) { return qpade::to_string(c); }
inline std::string coefficient_string(const RatFunc& c) { return c.to_string(); }

/// Dense univariate polynomial over a field F (RatFunc on the q-side, BigRat
/// on the classical side), ascending degree, no trailing zeros.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(Variable var) : var_(var) {}
  Poly(Variable var, std::vector<F> coeffs) : var_(var), coeffs_(std::move(coeffs)) { normalize(); }

  static Poly constant(Variable var, F c) { return Poly(var, {std::move(c)}); }
  static Poly monomial(Variable var, F c, std::size_t degree) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = std::move(c);
    return Poly(var, std::move(v));
  }
  /// 1 - a*x.
  static Poly one_minus(Variable var, const F& a) { return Poly(var, {F(1), F(-a)}); }

  Variable variable() const { return var_; }
  const std::vector<F>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }
  const F& lead() const { return coeffs_.back(); }

  F evaluate(const F& x) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Coefficients of p(x0 + h) in powers of h.
  Poly taylor_shift(const F& x0) const {
    std::vector<F> c = coeffs_;
    const std::size_t d = c.size();
    for (std::size_t i = 0; i + 1 < d; ++i) {
      for (std::size_t k = d - 1; k-- > i;) c[k] = c[k] + x0 * c[k + 1];
    }
    return Poly(var_, std::move(c));
  }

  /// Order of vanishing at x = 0 (number of trailing zero coefficients).
  std::size_t low_order() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && is_zero_value(coeffs_[i])) ++i;
    return i;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.var_);
    std::vector<F> r(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_value(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (is_zero_value(b.coeffs_[j])) continue;
        r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(a.var_, std::move(r));
  }
  friend Poly operator*(const Poly& a, const F& c) {
    if (is_zero_value(c)) return Poly(a.var_);
    Poly r = a;
    for (auto& x : r.coeffs_) x = x * c;
    r.normalize();
    return r;
  }
  Poly pow(std::size_t e) const {
    Poly r = constant(var_, F(1));
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; throws ArithmeticError for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    std::vector<F> rem = a.coeffs_;
    if (a.degree() < b.degree()) return {Poly(a.var_), a};
    std::vector<F> quot(rem.size() - b.coeffs_.size() + 1, F(0));
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
      const F top = rem[k + db];
      if (is_zero_value(top)) continue;
      quot[k] = top / b.lead();
      for (std::size_t i = 0; i <= db; ++i) rem[k + i] = rem[k + i] - quot[k] * b.coeffs_[i];
    }
    rem.resize(db);
    return {Poly(a.var_, std::move(quot)), Poly(a.var_, std::move(rem))};
  }

  bool divisible_by(const Poly& b) const { return divmod(*this, b).second.is_zero(); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (is_zero_value(coeffs_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coefficient_string(coeffs_[i]) + ")";
      if (i > 0) out += std::string("*") + variable_name(var_) + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  static bool is_zero_value(const F& x) { return qpade::is_zero(x); }
  void normalize() {
    while (!coeffs_.empty() && is_zero_value(coeffs_.back())) coeffs_.pop_back();
  }

  Variable var_ = Variable::z;
  std::vector<F> coeffs_;
};

using QPoly = Poly<RatFunc>;
using RatPoly = Poly<BigRat>;

}  // namespace qpade
