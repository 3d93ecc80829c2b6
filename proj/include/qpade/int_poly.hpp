#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpade/bigrat.hpp"

namespace qpade {

/// Dense polynomial in q with arbitrary-precision integer coefficients,
/// ascending degree. The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(long c);  // NOLINT(google-explicit-constructor)
  IntPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// q^k for k >= 0.
  static IntPoly q_power(std::size_t k);
  /// 1 - q^k for k >= 0 (zero when k == 0).
  static IntPoly one_minus_q_power(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& lead() const { return coeffs_.back(); }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Non-negative gcd of all coefficients (0 for the zero polynomial).
  BigInt content() const;
  IntPoly primitive_part() const;
  /// Total number of decimal-ish digits (bits) in the coefficients.
  std::size_t size_measure() const;

  BigRat evaluate(const BigRat& x) const;
  BigInt evaluate(const BigInt& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// Divides every coefficient by c; throws ArithmeticError if inexact.
  IntPoly divexact(const BigInt& c) const;

  /// Exact quotient a / b in Z[q]; throws ArithmeticError if b does not divide a.
  static IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

  /// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
  static IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

  /// Number of times (1 - q) divides this polynomial; requires nonzero.
  std::size_t valuation_at_one() const;
  /// Quotient by (1 - q)^k; requires divisibility.
  IntPoly divide_by_one_minus_q(std::size_t k) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Primitive gcd with positive leading coefficient, times the gcd of the
/// contents. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

inline bool is_zero(const IntPoly& p) { return p.is_zero(); }

}  // namespace qpade
