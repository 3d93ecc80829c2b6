#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "qpade/bigrat.hpp"
#include "qpade/errors.hpp"
#include "qpade/int_poly.hpp"
#include "qpade/rational_function.hpp"

namespace qpade {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Ties a field to the integral domain used for fraction-free elimination.
template <class F>
struct FractionFree;

template <>
struct FractionFree<RatFunc> {
  using Domain = IntPoly;
  static Domain one() { return IntPoly(1); }
  static bool is_zero(const Domain& x) { return x.is_zero(); }
  static Domain exact_div(const Domain& a, const Domain& b) { return IntPoly::divide_exact(a, b); }
  static std::size_t size(const Domain& x) { return x.size_measure(); }
  static RatFunc to_field(const Domain& x) { return RatFunc(x); }
  static Domain lcm(const Domain& a, const Domain& b) {
    const IntPoly g = gcd(a, b);
    return IntPoly::divide_exact(a, g) * b;
  }
  static const Domain& numerator(const RatFunc& f) { return f.num(); }
  static const Domain& denominator(const RatFunc& f) { return f.den(); }
};

template <>
struct FractionFree<BigRat> {
  using Domain = BigInt;
  static Domain one() { return 1; }
  static bool is_zero(const Domain& x) { return sgn(x) == 0; }
  static Domain exact_div(const Domain& a, const Domain& b) {
    Domain r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static std::size_t size(const Domain& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
  static BigRat to_field(const Domain& x) { return BigRat(x); }
  static Domain lcm(const Domain& a, const Domain& b) {
    Domain r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static Domain numerator(const BigRat& f) { return f.get_num(); }
  static Domain denominator(const BigRat& f) { return f.get_den(); }
};

/// Row echelon form produced by fraction-free elimination over a domain.
template <class D>
struct Echelon {
  Matrix<D> rows;                      // same shape as the input
  std::vector<std::size_t> pivot_cols;  // pivot column of rows 0..rank-1
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Bareiss elimination with row pivoting on the smallest nonzero entry of the
/// pivot column. Columns without a pivot are skipped; every division by the
/// previous pivot is exact because the entries remain minors of the input.
template <class F>
Echelon<typename FractionFree<F>::Domain> fraction_free_echelon(Matrix<typename FractionFree<F>::Domain> a) {
  using T = FractionFree<F>;
  using D = typename T::Domain;
  Echelon<D> out;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  D prev = T::one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::optional<std::size_t> best;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = r; i < m; ++i) {
      if (T::is_zero(a[i][c])) continue;
      const std::size_t sz = T::size(a[i][c]);
      if (sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (!best) continue;
    std::swap(a[r], a[*best]);
    const D& piv = a[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const D factor = a[i][c];
      for (std::size_t k = c + 1; k < n; ++k) {
        D v = piv * a[i][k];
        if (!T::is_zero(factor) && !T::is_zero(a[r][k])) v = v - factor * a[r][k];
        a[i][k] = T::exact_div(v, prev);
      }
      a[i][c] = D(0);
    }
    prev = a[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

/// Multiplies each row by the lcm of its denominators, giving a domain matrix
/// with the same row space.
template <class F>
Matrix<typename FractionFree<F>::Domain> clear_denominators(const Matrix<F>& a) {
  using T = FractionFree<F>;
  using D = typename T::Domain;
  Matrix<D> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    D l = T::one();
    for (const auto& x : row) {
      if (!qpade::is_zero(x)) l = T::lcm(l, T::denominator(x));
    }
    std::vector<D> drow;
    drow.reserve(row.size());
    for (const auto& x : row) {
      if (qpade::is_zero(x)) {
        drow.emplace_back(0);
      } else {
        drow.push_back(T::numerator(x) * T::exact_div(l, T::denominator(x)));
      }
    }
    out.push_back(std::move(drow));
  }
  return out;
}

namespace detail {

/// Solves the echelon system for the pivot unknowns given values of the
/// non-pivot unknowns (already placed in x).
template <class F>
void back_substitute(const Echelon<typename FractionFree<F>::Domain>& e, std::vector<F>& x, std::size_t ncols) {
  using T = FractionFree<F>;
  for (std::size_t r = e.rank(); r-- > 0;) {
    const std::size_t pc = e.pivot_cols[r];
    F acc(0);
    for (std::size_t k = pc + 1; k < ncols; ++k) {
      if (T::is_zero(e.rows[r][k]) || qpade::is_zero(x[k])) continue;
      acc = acc + T::to_field(e.rows[r][k]) * x[k];
    }
    x[pc] = F(-acc) / T::to_field(e.rows[r][pc]);
  }
}

}  // namespace detail

/// Exact nullspace basis over the field F: one vector per non-pivot column,
/// with that coordinate set to 1.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& a, std::size_t ncols) {
  const auto e = fraction_free_echelon<F>(clear_denominators(a));
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> x(ncols, F(0));
    x[f] = F(1);
    detail::back_substitute<F>(e, x, ncols);
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return fraction_free_echelon<F>(clear_denominators(a)).rank();
}

/// Solves the square system m x = b exactly; throws ArithmeticError when m is
/// singular.
template <class F>
std::vector<F> solve_square(const Matrix<F>& m, const std::vector<F>& b) {
  const std::size_t n = m.size();
  Matrix<F> aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw ArithmeticError("solve_square: matrix is not square");
    aug[i].push_back(b[i]);
  }
  const auto e = fraction_free_echelon<F>(clear_denominators(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) throw ArithmeticError("solve_square: singular matrix");
  std::vector<F> x(n + 1, F(0));
  x[n] = F(-1);
  detail::back_substitute<F>(e, x, n + 1);
  x.pop_back();
  return x;
}

}  // namespace qpade
