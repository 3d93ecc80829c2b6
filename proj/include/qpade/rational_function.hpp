#pragma once

#include <string>

#include "qpade/bigrat.hpp"
#include "qpade/int_poly.hpp"

namespace qpade {

/// Element of Q(q) kept in canonical form: num and den share no polynomial
/// factor, the combined content of their coefficients is 1, and the leading
/// coefficient of den is positive. Equality is therefore structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigInt& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRat& c);  // NOLINT(google-explicit-constructor)
  RatFunc(const IntPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Canonical form of num/den; throws ArithmeticError if den is zero.
  static RatFunc reduce(IntPoly num, IntPoly den);

  /// q^k for any integer k.
  static RatFunc q_power(long k);
  /// 1 - q^k for any integer k.
  static RatFunc one_minus_q_power(long k);
  /// (1 - q)^k for any integer k.
  static RatFunc one_minus_q_pow(long k);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  /// Order of f at q = 1: positive for zeros, negative for poles.
  /// Throws ArithmeticError for f = 0.
  long valuation_at_one() const;

  /// Exact value at q0; throws PoleError when den(q0) = 0.
  BigRat evaluate(const BigRat& q0) const;

  /// Floating value at q0 (no pole check beyond den != 0.0).
  double evaluate(double q0) const;

  RatFunc pow(long e) const;
  RatFunc inverse() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  // Trusted constructor: caller guarantees canonical form.
  RatFunc(IntPoly num, IntPoly den, int /*canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  // Removes the common integer content and fixes the sign of den; assumes
  // num and den are already coprime as polynomials.
  static RatFunc normalize_content(IntPoly num, IntPoly den);

  IntPoly num_;
  IntPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace qpade
