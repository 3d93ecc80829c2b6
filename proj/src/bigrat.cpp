#include "qpade/bigrat.hpp"

#include "qpade/errors.hpp"

namespace qpade {

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigRat parse_rational(const std::string& text) {
  BigRat r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw ArithmeticError("malformed rational literal '" + text + "'");
  }
  if (sgn(r.get_den()) == 0) {
    throw ArithmeticError("zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned long m) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

BigRat binomial(long ell, unsigned long m) {
  BigInt num = 1;
  for (unsigned long i = 0; i < m; ++i) num *= BigInt(ell - static_cast<long>(i));
  BigRat r(num, factorial(m));
  r.canonicalize();
  return r;
}

BigInt rising_factorial(long a, unsigned long m) {
  BigInt r = 1;
  for (unsigned long i = 0; i < m; ++i) r *= BigInt(a + static_cast<long>(i));
  return r;
}

}  // namespace qpade
