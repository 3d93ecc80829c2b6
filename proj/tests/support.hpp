#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "qpade/int_poly.hpp"
#include "qpade/rational_function.hpp"

namespace testing {

inline qpade::IntPoly ip(std::initializer_list<long> c) {
  std::vector<qpade::BigInt> v;
  for (long x : c) v.emplace_back(x);
  return qpade::IntPoly(std::move(v));
}

inline qpade::RatFunc rf(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return qpade::RatFunc::reduce(ip(num), ip(den));
}

inline qpade::RatFunc q() { return qpade::RatFunc::q_power(1); }

inline qpade::IntPoly random_poly(std::mt19937& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<qpade::BigInt> v;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) v.emplace_back(coef(rng));
  return qpade::IntPoly(std::move(v));
}

inline qpade::IntPoly random_nonzero_poly(std::mt19937& rng, int max_degree, long bound) {
  for (;;) {
    qpade::IntPoly p = random_poly(rng, max_degree, bound);
    if (!p.is_zero()) return p;
  }
}

}  // namespace testing
