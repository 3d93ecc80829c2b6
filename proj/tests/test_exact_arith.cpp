#include "doctest.h"
#include "qpade/bigrat.hpp"
#include "qpade/errors.hpp"
#include "qpade/linalg.hpp"
#include "qpade/polynomial.hpp"
#include "qpade/truncated_series.hpp"
#include "support.hpp"

using namespace qpade;
using testing::ip;
using testing::rf;

TEST_CASE("BigRat canonical form") {
  CHECK(to_string(BigRat(0)) == "0/1");
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational("10/5")) == "2/1");
  CHECK_THROWS_AS(parse_rational("1/0"), ArithmeticError);
  CHECK_THROWS_AS(parse_rational("abc"), ArithmeticError);
  CHECK(binomial(-1, 3) == BigRat(-1));
  CHECK(binomial(5, 2) == BigRat(10));
  CHECK(binomial(2, 3) == BigRat(0));
  CHECK(rising_factorial(3, 2) == 12);
  CHECK(factorial(5) == 120);
}

TEST_CASE("IntPoly arithmetic and gcd") {
  const IntPoly a = ip({-1, 0, 1});  // q^2 - 1
  const IntPoly b = ip({-1, 1});     // q - 1
  CHECK(IntPoly::divide_exact(a, b) == ip({1, 1}));
  CHECK_THROWS_AS(IntPoly::divide_exact(ip({1, 0, 1}), b), ArithmeticError);
  CHECK(gcd(a, b) == ip({-1, 1}));
  CHECK(gcd(ip({2, 2}), ip({4, -4})) == IntPoly(2));
  CHECK(ip({6, 4}).content() == 2);
  CHECK(ip({6, 4}).primitive_part() == ip({3, 2}));
  CHECK(IntPoly::one_minus_q_power(3) == ip({1, 0, 0, -1}));
  CHECK(ip({1, -2, 1}).valuation_at_one() == 2);
  CHECK(ip({1, 0, 0}).is_zero() == false);
  CHECK(ip({0, 0}).is_zero());
}

TEST_CASE("reduce examples") {
  const RatFunc f = RatFunc::reduce(ip({-1, 0, 1}), ip({-1, 1}));
  CHECK(f.num() == ip({1, 1}));
  CHECK(f.den() == ip({1}));

  const RatFunc z = RatFunc::reduce(IntPoly(), ip({0, 0, 0, 7}));
  CHECK(z.is_zero());
  CHECK(z.den() == ip({1}));

  const IntPoly one_minus_q = ip({1, -1});
  IntPoly cube = one_minus_q * one_minus_q * one_minus_q;
  IntPoly fifth = cube * one_minus_q * one_minus_q;
  const RatFunc g = RatFunc::reduce(cube, fifth);
  CHECK(g == RatFunc(1) / (RatFunc(one_minus_q) * RatFunc(one_minus_q)));
  CHECK(g.num() == ip({1}));
  CHECK(g.den() == ip({1, -2, 1}));

  CHECK_THROWS_AS(RatFunc::reduce(ip({1}), IntPoly()), ArithmeticError);
}

TEST_CASE("reduce normalizes sign and content") {
  const RatFunc f = RatFunc::reduce(ip({2, 4}), ip({-6}));
  CHECK(f.den() == ip({3}));
  CHECK(f.num() == ip({-1, -2}));
  CHECK(sgn(f.den().lead()) > 0);
}

TEST_CASE("valuation_at_one examples") {
  CHECK(RatFunc::one_minus_q_pow(2).valuation_at_one() == 2);
  CHECK(RatFunc::one_minus_q_pow(-3).valuation_at_one() == -3);
  CHECK(rf({1, 1}, {2}).valuation_at_one() == 0);
  CHECK_THROWS_AS(RatFunc().valuation_at_one(), ArithmeticError);
}

TEST_CASE("evaluate examples") {
  const RatFunc f = RatFunc(1) / rf({1, -1});
  CHECK(f.evaluate(BigRat(1, 2)) == BigRat(2));
  CHECK(rf({1, 1}).evaluate(BigRat(1)) == BigRat(2));
  CHECK_THROWS_AS(f.evaluate(BigRat(1)), PoleError);
  CHECK(f.evaluate(0.5) == doctest::Approx(2.0));
}

TEST_CASE("rational function field operations") {
  const RatFunc a = rf({1, 2}, {3, 0, 1});
  const RatFunc b = rf({0, 1}, {1, -1});
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(a * a.inverse() == RatFunc(1));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) * a.pow(2) == RatFunc(1));
  CHECK(RatFunc::q_power(-2) * RatFunc::q_power(2) == RatFunc(1));
  CHECK(RatFunc::one_minus_q_power(-1) == -RatFunc::q_power(-1) * RatFunc::one_minus_q_power(1));
  CHECK_THROWS_AS(a / RatFunc(), ArithmeticError);
}

TEST_CASE("property: reduce(a c, b c) = reduce(a, b)") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly a = testing::random_poly(rng, 4, 9);
    const IntPoly b = testing::random_nonzero_poly(rng, 4, 9);
    const IntPoly c = testing::random_nonzero_poly(rng, 3, 9);
    CHECK(RatFunc::reduce(a * c, b * c) == RatFunc::reduce(a, b));
  }
}

TEST_CASE("property: valuation_at_one is additive") {
  std::mt19937 rng(77);
  const IntPoly one_minus_q = ip({1, -1});
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = testing::random_nonzero_poly(rng, 3, 5);
    IntPoly b = testing::random_nonzero_poly(rng, 3, 5);
    std::uniform_int_distribution<int> pw(0, 3);
    for (int i = pw(rng); i > 0; --i) a *= one_minus_q;
    for (int i = pw(rng); i > 0; --i) b *= one_minus_q;
    const RatFunc f = RatFunc::reduce(a, testing::random_nonzero_poly(rng, 2, 5) * b);
    const RatFunc g = RatFunc::reduce(b * one_minus_q, testing::random_nonzero_poly(rng, 3, 5));
    CHECK((f * g).valuation_at_one() == f.valuation_at_one() + g.valuation_at_one());
  }
}

TEST_CASE("property: evaluate is a ring homomorphism away from poles") {
  std::mt19937 rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc f = RatFunc::reduce(testing::random_poly(rng, 3, 7), testing::random_nonzero_poly(rng, 3, 7));
    const RatFunc g = RatFunc::reduce(testing::random_poly(rng, 3, 7), testing::random_nonzero_poly(rng, 3, 7));
    const BigRat q0(std::uniform_int_distribution<long>(-50, 50)(rng), 7);
    try {
      const BigRat fv = f.evaluate(q0);
      const BigRat gv = g.evaluate(q0);
      CHECK((f + g).evaluate(q0) == fv + gv);
      CHECK((f * g).evaluate(q0) == fv * gv);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("polynomials over Q(q)") {
  const QPoly p(Variable::s, {RatFunc(1), -testing::q()});  // 1 - q s
  CHECK(p == QPoly::one_minus(Variable::s, testing::q()));
  CHECK(p.degree() == 1);
  CHECK(p.evaluate(RatFunc::q_power(-1)).is_zero());
  const QPoly sq = p * p;
  CHECK(sq.divisible_by(p));
  const auto [quot, rem] = QPoly::divmod(sq, p);
  CHECK(quot == p);
  CHECK(rem.is_zero());

  const RatPoly r(Variable::z, {BigRat(1), BigRat(2), BigRat(3)});
  const RatPoly shifted = r.taylor_shift(BigRat(1));  // r(1 + h) = 6 + 8h + 3h^2
  CHECK(shifted.coeff(0) == BigRat(6));
  CHECK(shifted.coeff(1) == BigRat(8));
  CHECK(shifted.coeff(2) == BigRat(3));
  CHECK(RatPoly(Variable::z, {BigRat(0), BigRat(0), BigRat(5)}).low_order() == 2);
}

TEST_CASE("log_series_at_one examples") {
  const auto s3 = log_series_at_one(3);
  CHECK(s3.truncation() == 3);
  CHECK(s3.coefficient(0) == BigRat(0));
  CHECK(s3.coefficient(1) == BigRat(-1));
  CHECK(s3.coefficient(2) == BigRat(1, 2));
  CHECK_THROWS_AS(s3.coefficient(3), ArithmeticError);

  const auto s1 = log_series_at_one(1);
  CHECK(s1.coefficient(0) == BigRat(0));
  CHECK_THROWS_AS(s1.coefficient(1), ArithmeticError);

  const auto s2 = log_series_at_one(2);
  CHECK(s2.coefficient(1) == BigRat(-1));
  CHECK(s2.valuation() == 1);
}

TEST_CASE("property: series product against direct convolution") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<long> first(-3, 3);
  std::uniform_int_distribution<long> len(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const long fa = first(rng), fb = first(rng);
    const long la = len(rng), lb = len(rng);
    std::vector<BigRat> ca, cb;
    for (long i = 0; i < la; ++i) ca.emplace_back(coef(rng));
    for (long i = 0; i < lb; ++i) cb.emplace_back(coef(rng));
    const TruncatedSeries<BigRat> a(SeriesVar::z, fa, ca, fa + la);
    const TruncatedSeries<BigRat> b(SeriesVar::z, fb, cb, fb + lb);
    const auto c = a * b;
    CHECK(c.truncation() == std::min(fa + la + fb, fb + lb + fa));
    for (long e = fa + fb; e < c.truncation(); ++e) {
      BigRat direct;
      for (long i = 0; i < la; ++i) {
        const long k = e - fa - i - fb;
        if (k >= 0 && k < lb) direct += ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(k)];
      }
      CHECK(c.coefficient(e) == direct);
    }
    CHECK_THROWS_AS(c.coefficient(c.truncation()), ArithmeticError);
  }
}

TEST_CASE("series inverse and sum truncation") {
  // 1/(1 - x) = 1 + x + x^2 + ...
  const TruncatedSeries<BigRat> d(SeriesVar::z, 0, {BigRat(1), BigRat(-1)}, 5);
  const auto inv = d.inverse();
  for (long e = 0; e < 5; ++e) CHECK(inv.coefficient(e) == BigRat(1));
  const TruncatedSeries<BigRat> shorter(SeriesVar::z, 0, {BigRat(2)}, 3);
  CHECK((d + shorter).truncation() == 3);
  CHECK_THROWS_AS(TruncatedSeries<BigRat>::zero(SeriesVar::z, 4).inverse(), ArithmeticError);
}

TEST_CASE("fraction-free linear algebra over Q") {
  const Matrix<BigRat> m = {{BigRat(1), BigRat(2), BigRat(3)}, {BigRat(2), BigRat(4), BigRat(6)}};
  CHECK(rank(m) == 1);
  const auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);

  const Matrix<BigRat> a = {{BigRat(2), BigRat(1)}, {BigRat(1), BigRat(3)}};
  const auto x = solve_square(a, {BigRat(3), BigRat(5)});
  CHECK(x[0] == BigRat(4, 5));
  CHECK(x[1] == BigRat(7, 5));
  CHECK_THROWS_AS(solve_square(m.size() == 2 ? Matrix<BigRat>{{BigRat(1), BigRat(2)}, {BigRat(2), BigRat(4)}} : m,
                               {BigRat(1), BigRat(1)}),
                  ArithmeticError);
}

TEST_CASE("fraction-free linear algebra over Q(q)") {
  const RatFunc q = testing::q();
  const Matrix<RatFunc> m = {{RatFunc(1), q}, {q, q * q}};
  CHECK(rank(m) == 1);
  const auto ns = nullspace(m, 2);
  REQUIRE(ns.size() == 1);
  CHECK((ns[0][0] + q * ns[0][1]).is_zero());
  const auto x = solve_square(Matrix<RatFunc>{{RatFunc(1), q}, {RatFunc(1), RatFunc(1)}}, {RatFunc(1), RatFunc(0)});
  CHECK(x[0] + q * x[1] == RatFunc(1));
  CHECK((x[0] + x[1]).is_zero());
}
