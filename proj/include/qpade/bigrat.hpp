#pragma once

#include <gmpxx.h>

#include <string>

namespace qpade {

using BigInt = mpz_class;
/// Exact rational; GMP keeps it canonical (den > 0, gcd = 1, zero is 0/1).
using BigRat = mpq_class;

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }

/// "p/q" with the denominator always written, e.g. "0/1".
std::string to_string(const BigRat& x);
std::string to_string(const BigInt& x);

/// Parses "p" or "p/q"; throws qpade::ArithmeticError on malformed input.
BigRat parse_rational(const std::string& text);

BigInt factorial(unsigned long m);

/// Generalized binomial coefficient ell choose m for any integer ell, m >= 0.
BigRat binomial(long ell, unsigned long m);

/// Rising factorial (a)_m = a(a+1)...(a+m-1); (a)_0 = 1.
BigInt rising_factorial(long a, unsigned long m);

}  // namespace qpade
