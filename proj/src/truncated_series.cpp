#include "qpade/truncated_series.hpp"

namespace qpade {

TruncatedSeries<BigRat> log_series_at_one(long order) {
  if (order < 0) throw ArithmeticError("log_series_at_one: negative order");
  std::vector<BigRat> c;
  for (long m = 0; m < order; ++m) {
    if (m == 0) {
      c.emplace_back(0);
    } else {
      BigRat v(m % 2 == 0 ? 1 : -1, m);
      v.canonicalize();
      c.push_back(v);
    }
  }
  return TruncatedSeries<BigRat>(SeriesVar::z_minus_one, 0, std::move(c), order);
}

}  // namespace qpade
