#include "qpade/rational_function.hpp"

#include <cmath>
#include <utility>

#include "qpade/errors.hpp"

namespace qpade {

RatFunc::RatFunc(const BigRat& c) : num_(c.get_num()), den_(c.get_den()) {}

RatFunc RatFunc::normalize_content(IntPoly num, IntPoly den) {
  if (num.is_zero()) return RatFunc(IntPoly(), IntPoly(1), 0);
  BigInt c = num.content();
  const BigInt cd = den.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (sgn(den.lead()) < 0) c = -c;
  if (c != 1) {
    num = num.divexact(c);
    den = den.divexact(c);
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc RatFunc::reduce(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  if (!den.is_constant() && !num.is_constant()) {
    IntPoly g = gcd(num, den).primitive_part();
    if (!g.is_constant()) {
      num = IntPoly::divide_exact(num, g);
      den = IntPoly::divide_exact(den, g);
    }
  }
  return normalize_content(std::move(num), std::move(den));
}

RatFunc RatFunc::q_power(long k) {
  if (k >= 0) return RatFunc(IntPoly::q_power(static_cast<std::size_t>(k)));
  return RatFunc(IntPoly(1), IntPoly::q_power(static_cast<std::size_t>(-k)), 0);
}

RatFunc RatFunc::one_minus_q_power(long k) {
  if (k >= 0) return RatFunc(IntPoly::one_minus_q_power(static_cast<std::size_t>(k)));
  // 1 - q^{-m} = (q^m - 1) / q^m
  const auto m = static_cast<std::size_t>(-k);
  return RatFunc(-IntPoly::one_minus_q_power(m), IntPoly::q_power(m), 0);
}

RatFunc RatFunc::one_minus_q_pow(long k) {
  const RatFunc base(IntPoly::one_minus_q_power(1));
  return base.pow(k);
}

long RatFunc::valuation_at_one() const {
  if (is_zero()) throw ArithmeticError("valuation_at_one of the zero rational function");
  return static_cast<long>(num_.valuation_at_one()) - static_cast<long>(den_.valuation_at_one());
}

BigRat RatFunc::evaluate(const BigRat& q0) const {
  const BigRat d = den_.evaluate(q0);
  if (sgn(d) == 0) {
    throw PoleError("q = " + qpade::to_string(q0) + " is a pole of " + to_string());
  }
  return num_.evaluate(q0) / d;
}

double RatFunc::evaluate(double q0) const {
  auto horner = [q0](const IntPoly& p) {
    double acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q0 + it->get_d();
    return acc;
  };
  return horner(num_) / horner(den_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational function");
  return normalize_content(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::reduce(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant() && b.den_.is_constant()) {
    return RatFunc::normalize_content(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  // num/den with g = gcd(da, db): any common factor of the new numerator and
  // the new denominator divides g.
  const IntPoly g = gcd(a.den_, b.den_).primitive_part();
  if (g.is_constant()) {
    return RatFunc::normalize_content(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  const IntPoly da = IntPoly::divide_exact(a.den_, g);
  const IntPoly db = IntPoly::divide_exact(b.den_, g);
  IntPoly num = a.num_ * db + b.num_ * da;
  IntPoly den = da * b.den_;
  if (num.is_zero()) return RatFunc();
  const IntPoly h = gcd(num, g).primitive_part();
  if (!h.is_constant()) {
    num = IntPoly::divide_exact(num, h);
    den = IntPoly::divide_exact(den, h);
  }
  return RatFunc::normalize_content(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  // Cross-cancel so that no gcd of full products is ever needed.
  IntPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!an.is_constant() && !bd.is_constant()) {
    const IntPoly g = gcd(an, bd).primitive_part();
    if (!g.is_constant()) {
      an = IntPoly::divide_exact(an, g);
      bd = IntPoly::divide_exact(bd, g);
    }
  }
  if (!bn.is_constant() && !ad.is_constant()) {
    const IntPoly g = gcd(bn, ad).primitive_part();
    if (!g.is_constant()) {
      bn = IntPoly::divide_exact(bn, g);
      ad = IntPoly::divide_exact(ad, g);
    }
  }
  return RatFunc::normalize_content(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero rational function");
  return a * b.inverse();
}

std::string RatFunc::to_string() const {
  if (den_ == IntPoly(1)) return num_.to_string();
  auto wrap = [](const IntPoly& p) {
    std::string s = p.to_string();
    return p.coeffs().size() > 1 || sgn(p.lead()) < 0 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace qpade
