#include "qpade/q_special.hpp"

#include <cmath>
#include <string>

#include "qpade/errors.hpp"

namespace qpade {

QPoly q_pochhammer_poly(const PochhammerSpec& spec) {
  QPoly p = QPoly::constant(Variable::s, RatFunc(1));
  for (std::size_t i = 0; i < spec.length; ++i) {
    p = p * QPoly::one_minus(Variable::s, RatFunc::q_power(spec.offset + static_cast<long>(i)));
  }
  return p;
}

RatFunc q_pochhammer_value(long a, std::size_t m) {
  RatFunc r(1);
  for (std::size_t i = 0; i < m; ++i) {
    const long e = a + static_cast<long>(i);
    if (e == 0) return RatFunc();
    r *= RatFunc::one_minus_q_power(e);
  }
  return r;
}

RatFunc qpolylog_coeff(long j, long k) {
  if (j < 1) throw ArithmeticError("qpolylog_coeff: weight j must be >= 1");
  if (k < 1) throw ArithmeticError("qpolylog_coeff: index k must be >= 1, got " + std::to_string(k));
  return RatFunc::reduce(IntPoly::q_power(static_cast<std::size_t>(k)),
                         [&] {
                           IntPoly d(1);
                           const IntPoly f = IntPoly::one_minus_q_power(static_cast<std::size_t>(k));
                           for (long i = 0; i < j; ++i) d *= f;
                           return d;
                         }());
}

RatFunc qpolylog_recip_coeff(long j, long k) {
  if (j < 1) throw ArithmeticError("qpolylog_recip_coeff: weight j must be >= 1");
  if (k < 1) throw ArithmeticError("qpolylog_recip_coeff: index k must be >= 1, got " + std::to_string(k));
  // 1 - q^{-k} = -q^{-k} (1 - q^k)
  IntPoly num = IntPoly::q_power(static_cast<std::size_t>(k * (j - 1)));
  if (j % 2 != 0) num = -num;
  IntPoly den(1);
  const IntPoly f = IntPoly::one_minus_q_power(static_cast<std::size_t>(k));
  for (long i = 0; i < j; ++i) den *= f;
  return RatFunc::reduce(std::move(num), std::move(den));
}

BigInt classical_pochhammer(long a, std::size_t m) { return rising_factorial(a, m); }

RatPoly classical_pochhammer_poly(long a, std::size_t m) {
  RatPoly p = RatPoly::constant(Variable::s, BigRat(1));
  for (std::size_t i = 0; i < m; ++i) {
    p = p * RatPoly(Variable::s, {BigRat(a + static_cast<long>(i)), BigRat(1)});
  }
  return p;
}

double one_minus_q_power(double q0, double k) { return -std::expm1(k * std::log(q0)); }

namespace {

double zeta_term(unsigned s, double q0, std::size_t k) {
  const auto kd = static_cast<double>(k);
  return std::pow(kd, static_cast<double>(s) - 1.0) * std::pow(q0, kd) / one_minus_q_power(q0, kd);
}

// Bound on sum_{k > terms} T_k with T_k = k^{s-1} q^k / (1 - q^k). Once the
// ratio bound r_k = ((k+1)/k)^{s-1} q drops below 1 it stays below 1, and
// T_{k+1} <= r_k T_k because 1/(1 - q^k) is decreasing in k.
double zeta_tail_bound(unsigned s, double q0, std::size_t terms) {
  double explicit_part = 0.0;
  std::size_t k = terms + 1;
  for (;;) {
    const auto kd = static_cast<double>(k);
    const double ratio = std::pow((kd + 1.0) / kd, static_cast<double>(s) - 1.0) * q0;
    const double t = zeta_term(s, q0, k);
    if (ratio < 1.0) return explicit_part + t / (1.0 - ratio);
    explicit_part += t;
    ++k;
  }
}

}  // namespace

QZetaPartial q_zeta_partial(unsigned s, double q0, std::size_t terms) {
  if (!(q0 > 0.0 && q0 < 1.0)) throw ArithmeticError("q_zeta_partial: q must lie in (0, 1)");
  if (s < 1) throw ArithmeticError("q_zeta_partial: s must be >= 1");
  QZetaPartial out;
  // Kahan summation; term counts reach 10^5 near q = 1.
  double sum = 0.0, comp = 0.0;
  for (std::size_t k = 1; k <= terms; ++k) {
    const double y = zeta_term(s, q0, k) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  out.value = sum;
  out.tail_bound = zeta_tail_bound(s, q0, terms);
  return out;
}

QZetaPartial q_zeta(unsigned s, double q0, double tolerance, std::size_t max_terms) {
  if (!(q0 > 0.0 && q0 < 1.0)) throw ArithmeticError("q_zeta: q must lie in (0, 1)");
  std::size_t terms = 16;
  while (zeta_tail_bound(s, q0, terms) > tolerance) {
    if (terms >= max_terms) throw ArithmeticError("q_zeta: tolerance not reached within max_terms");
    terms *= 2;
  }
  return q_zeta_partial(s, q0, terms);
}

}  // namespace qpade
