#include "qpade/int_poly.hpp"

#include <algorithm>
#include <utility>

#include "qpade/errors.hpp"

namespace qpade {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

IntPoly::IntPoly(const BigInt& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  IntPoly p;
  if (sgn(c) == 0) return p;
  p.coeffs_.assign(degree + 1, BigInt(0));
  p.coeffs_[degree] = c;
  return p;
}

IntPoly IntPoly::q_power(std::size_t k) { return monomial(BigInt(1), k); }

IntPoly IntPoly::one_minus_q_power(std::size_t k) {
  if (k == 0) return IntPoly();
  IntPoly p = monomial(BigInt(-1), k);
  p.coeffs_[0] = 1;
  return p;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (sgn(lead()) < 0) c = -c;
  return divexact(c);
}

std::size_t IntPoly::size_measure() const {
  std::size_t total = 0;
  for (const auto& c : coeffs_) total += mpz_sizeinbase(c.get_mpz_t(), 2);
  return total + coeffs_.size();
}

BigRat IntPoly::evaluate(const BigRat& x0) const {
  BigRat x = x0;
  x.canonicalize();
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly IntPoly::divexact(const BigInt& c) const {
  if (sgn(c) == 0) throw ArithmeticError("IntPoly::divexact by zero");
  IntPoly r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw ArithmeticError("IntPoly::divexact: coefficient not divisible");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ArithmeticError("IntPoly::divide_exact by zero polynomial");
  if (a.is_zero()) return {};
  if (b.degree() == 0) return a.divexact(b.coeffs_[0]);
  if (a.degree() < b.degree()) throw ArithmeticError("IntPoly::divide_exact: inexact division");
  std::vector<BigInt> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<BigInt> quot(rem.size() - db, BigInt(0));
  const mpz_srcptr lb = b.lead().get_mpz_t();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb)) {
      throw ArithmeticError("IntPoly::divide_exact: inexact division");
    }
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lb);
    for (std::size_t i = 0; i <= db; ++i) {
      mpz_submul(rem[k + i].get_mpz_t(), quot[k].get_mpz_t(), b.coeffs_[i].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(rem[i]) != 0) throw ArithmeticError("IntPoly::divide_exact: inexact division");
  }
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ArithmeticError("pseudo_remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs_;
  const std::size_t da = r.size() - 1;
  const std::size_t db = b.coeffs_.size() - 1;
  const BigInt& lb = b.lead();
  for (std::size_t top = da + 1; top-- > db;) {
    const BigInt t = r[top];
    for (std::size_t i = 0; i < top; ++i) r[i] *= lb;
    if (sgn(t) != 0) {
      const std::size_t shift = top - db;
      for (std::size_t i = 0; i < db; ++i) {
        mpz_submul(r[shift + i].get_mpz_t(), t.get_mpz_t(), b.coeffs_[i].get_mpz_t());
      }
    }
    r[top] = 0;
  }
  r.resize(db);
  return IntPoly(std::move(r));
}

std::size_t IntPoly::valuation_at_one() const {
  if (is_zero()) throw ArithmeticError("valuation of the zero polynomial");
  std::size_t v = 0;
  IntPoly p = *this;
  for (;;) {
    BigInt sum = 0;
    for (const auto& c : p.coeffs_) sum += c;
    if (sgn(sum) != 0) return v;
    p = p.divide_by_one_minus_q(1);
    ++v;
  }
}

IntPoly IntPoly::divide_by_one_minus_q(std::size_t k) const {
  IntPoly p = *this;
  for (std::size_t step = 0; step < k; ++step) {
    if (p.is_zero()) return p;
    // Synthetic division by (q - 1), then negate.
    std::vector<BigInt> quot(p.coeffs_.size() - 1, BigInt(0));
    BigInt carry = 0;
    for (std::size_t i = p.coeffs_.size(); i-- > 1;) {
      carry += p.coeffs_[i];
      quot[i - 1] = -carry;
    }
    carry += p.coeffs_[0];
    if (sgn(carry) != 0) throw ArithmeticError("polynomial not divisible by (1 - q)");
    p = IntPoly(std::move(quot));
  }
  return p;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  BigInt c;
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return IntPoly(c);
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x == y) return x * c;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return IntPoly(c);
    IntPoly r = IntPoly::pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * c;
}

}  // namespace qpade
