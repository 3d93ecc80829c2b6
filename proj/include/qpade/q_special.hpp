#pragma once

#include <cstddef>

#include "qpade/bigrat.hpp"
#include "qpade/polynomial.hpp"
#include "qpade/rational_function.hpp"

namespace qpade {

/// The product prod_{i=0}^{length-1} (1 - s q^{offset+i}); length 0 is 1.
struct PochhammerSpec {
  long offset = 0;
  std::size_t length = 0;
};

/// (s q^offset; q)_length as a polynomial in s over Q(q).
QPoly q_pochhammer_poly(const PochhammerSpec& spec);

/// (q^a; q)_m as an element of Q(q), for any integer a.
RatFunc q_pochhammer_value(long a, std::size_t m);

/// Coefficient of z^k in Li_j(z; q): q^k / (1 - q^k)^j.
RatFunc qpolylog_coeff(long j, long k);

/// Coefficient of z^k in Li_j(z; 1/q): q^{-k} / (1 - q^{-k})^j, held in the
/// positive-power form (-1)^j q^{k(j-1)} / (1 - q^k)^j.
RatFunc qpolylog_recip_coeff(long j, long k);

/// Classical rising factorial (a)_m.
BigInt classical_pochhammer(long a, std::size_t m);

/// (s + a)_m as a polynomial in s over Q.
RatPoly classical_pochhammer_poly(long a, std::size_t m);

/// Partial sum of zeta_q(s) = sum_k k^{s-1} q^k / (1 - q^k) over k <= terms,
/// with a rigorous upper bound on the discarded tail.
struct QZetaPartial {
  double value = 0.0;
  double tail_bound = 0.0;
};

QZetaPartial q_zeta_partial(unsigned s, double q0, std::size_t terms);

/// Smallest partial sum whose tail bound is at most tolerance.
QZetaPartial q_zeta(unsigned s, double q0, double tolerance, std::size_t max_terms = 50'000'000);

/// 1 - q^k in floating point without cancellation for q near 1.
double one_minus_q_power(double q0, double k);

}  // namespace qpade
