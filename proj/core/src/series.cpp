#include "univalent/series.hpp"

namespace univalent {

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Rational c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

template class TruncatedSeries<Rational>;
template class TruncatedSeries<Complex>;

}  // namespace univalent
