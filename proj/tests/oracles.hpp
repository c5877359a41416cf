#pragma once

// Test-only reference computations. Nothing here calls into the series or
// shear code paths it is used to check.

#include <algorithm>
#include <complex>
#include <functional>
#include <cstdint>
#include <random>
#include <vector>

#include "univalent/scalar.hpp"
#include "univalent/series.hpp"

namespace univalent::oracle {

/// Exact integer binomial via Pascal's rule.
inline Rational pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<Rational> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Taylor coefficient of z^n in P(z)/(1 - z)^m, P given by its coefficient
/// list, by convolution with C(j + m - 1, m - 1).
inline Rational rational_function_coef(const std::vector<Rational>& numerator, int m, int n) {
  Rational sum = 0;
  for (int k = 0; k < static_cast<int>(numerator.size()) && k <= n; ++k) {
    sum += numerator[static_cast<std::size_t>(k)] * pascal(n - k + m - 1, m - 1);
  }
  return sum;
}

/// a_n of k_a from h' = (1 + z)(1 + a z)/(1 - z)^4 = (1 + (1+a) z + a z^2)/(1 - z)^4,
/// integrated termwise.
inline Rational koebe_a_coefficient(int n, const Rational& a) {
  return rational_function_coef({Rational(1), 1 + a, a}, 4, n - 1) / n;
}

/// Schoolbook long division of num/den to `order` terms (den[0] != 0).
inline std::vector<Rational> long_division(std::vector<Rational> num,
                                           const std::vector<Rational>& den, int order) {
  num.resize(static_cast<std::size_t>(order) + 1, 0);
  std::vector<Rational> quotient(static_cast<std::size_t>(order) + 1, 0);
  for (int k = 0; k <= order; ++k) {
    const Rational q = num[k] / den[0];
    quotient[k] = q;
    for (int j = 0; j < static_cast<int>(den.size()) && k + j <= order; ++j) {
      num[k + j] -= q * den[j];
    }
  }
  return quotient;
}

/// Random exact series with small numerators and denominators.
inline TruncatedSeries<Rational> random_exact(std::mt19937_64& rng, int order,
                                              bool nonzero_constant = false) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (nonzero_constant) {
    while (c[0] == 0) c[0] = Rational(num(rng), den(rng));
  }
  return TruncatedSeries<Rational>(std::move(c));
}

inline TruncatedSeries<Complex> random_floating(std::mt19937_64& rng, int order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  c[0] += Complex(c[0].real() >= 0 ? 1.5 : -1.5, 0.0);
  return TruncatedSeries<Complex>(std::move(c));
}

/// Largest number of crossings of a horizontal line with the closed
/// polygon `curve` (already rotated so the direction of interest is
/// horizontal). Lines are placed strictly between consecutive distinct
/// vertex heights, so no line passes through a vertex.
inline int max_line_crossings(const std::vector<std::complex<double>>& curve) {
  std::vector<double> heights;
  heights.reserve(curve.size());
  for (const auto& w : curve) heights.push_back(w.imag());
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  int worst = 0;
  const std::size_t stride = std::max<std::size_t>(1, heights.size() / 4000);
  for (std::size_t i = 0; i + 1 < heights.size(); i += stride) {
    const double y = 0.5 * (heights[i] + heights[i + 1]);
    int crossings = 0;
    for (std::size_t j = 0; j < curve.size(); ++j) {
      const double y0 = curve[j].imag();
      const double y1 = curve[(j + 1) % curve.size()].imag();
      if ((y0 < y) != (y1 < y)) ++crossings;
    }
    worst = std::max(worst, crossings);
  }
  return worst;
}

inline std::vector<std::complex<double>> sample_curve(
    const std::function<std::complex<double>(std::complex<double>)>& f, double phi, double r,
    int samples) {
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(samples));
  const auto unrotate = std::polar(1.0, -phi);
  for (int j = 0; j < samples; ++j) {
    out.push_back(unrotate * f(std::polar(r, 2.0 * 3.14159265358979323846 * j / samples)));
  }
  return out;
}

}  // namespace univalent::oracle
