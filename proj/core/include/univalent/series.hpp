#pragma once

// Truncated power series c_0 + c_1 z + ... + c_N z^N over a Scalar mode.
//
// Every binary operation truncates to the smaller order of its operands.
// Values are immutable once built; all operations return new series.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "univalent/errors.hpp"
#include "univalent/mobius.hpp"
#include "univalent/scalar.hpp"

namespace univalent {

inline constexpr int kDefaultOrder = 64;

/// Smallest |c_0| accepted by reciprocal() in floating mode.
inline constexpr double kReciprocalThreshold = 1e-12;

template <Scalar T>
class TruncatedSeries {
 public:
  using value_type = T;

  /// The zero series of the given order.
  explicit TruncatedSeries(int order = 0) : coeffs_(checked_length(order), T(0)) {}

  /// Takes c_0..c_N; the order is size() - 1.
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
  }

  static TruncatedSeries constant(T c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }

  /// c z^k, truncated to `order` (zero when k > order).
  static TruncatedSeries monomial(int k, T c, int order) {
    TruncatedSeries s(order);
    if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  const T& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  std::span<const T> coefficients() const noexcept { return coeffs_; }

  /// Drops terms above `order`. Extending is not allowed.
  TruncatedSeries truncated(int order) const {
    if (order > this->order()) {
      throw std::invalid_argument("truncation cannot raise the order of a series");
    }
    return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  friend TruncatedSeries operator+(const TruncatedSeries& p, const TruncatedSeries& q) {
    const int n = std::min(p.order(), q.order());
    std::vector<T> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[k] = p[k] + q[k];
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& p, const TruncatedSeries& q) {
    const int n = std::min(p.order(), q.order());
    std::vector<T> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[k] = p[k] - q[k];
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& p) {
    std::vector<T> out(p.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = -p.coeffs_[k];
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator*(const T& s, const TruncatedSeries& p) {
    std::vector<T> out(p.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = s * p.coeffs_[k];
    return TruncatedSeries(std::move(out));
  }

  // Cauchy product.
  friend TruncatedSeries operator*(const TruncatedSeries& p, const TruncatedSeries& q) {
    const int n = std::min(p.order(), q.order());
    std::vector<T> out(static_cast<std::size_t>(n) + 1, T(0));
    for (int i = 0; i <= n; ++i) {
      if (p[i] == T(0)) continue;
      for (int j = 0; i + j <= n; ++j) out[i + j] += p[i] * q[j];
    }
    return TruncatedSeries(std::move(out));
  }

 private:
  static std::size_t checked_length(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<T> coeffs_;
};

template <Scalar T>
TruncatedSeries<T> add(const TruncatedSeries<T>& p, const TruncatedSeries<T>& q) {
  return p + q;
}

template <Scalar T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& p, const TruncatedSeries<T>& q) {
  return p * q;
}

/// Multiplicative inverse to the order of p. Requires c_0 != 0 (exact) or
/// |c_0| > kReciprocalThreshold (floating); throws ConstantTermZero otherwise.
template <Scalar T>
TruncatedSeries<T> reciprocal(const TruncatedSeries<T>& p) {
  if constexpr (is_exact_v<T>) {
    if (p[0] == 0) throw ConstantTermZero("reciprocal of a series with zero constant term");
  } else {
    if (std::abs(p[0]) <= kReciprocalThreshold) {
      throw ConstantTermZero("reciprocal of a series with vanishing constant term");
    }
  }
  const int n = p.order();
  std::vector<T> r(static_cast<std::size_t>(n) + 1, T(0));
  const T inv0 = T(1) / p[0];
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int j = 1; j <= k; ++j) acc += p[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return TruncatedSeries<T>(std::move(r));
}

/// p'. The order drops by one; a constant (order 0) differentiates to the
/// zero series of order 0.
template <Scalar T>
TruncatedSeries<T> differentiate(const TruncatedSeries<T>& p) {
  const int n = p.order();
  if (n == 0) return TruncatedSeries<T>(0);
  std::vector<T> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[k] = T(k + 1) * p[k + 1];
  return TruncatedSeries<T>(std::move(out));
}

/// Antiderivative vanishing at 0; the order rises by one.
template <Scalar T>
TruncatedSeries<T> integrate(const TruncatedSeries<T>& p) {
  const int n = p.order();
  std::vector<T> out(static_cast<std::size_t>(n) + 2, T(0));
  for (int k = 1; k <= n + 1; ++k) out[k] = p[k - 1] / T(k);
  return TruncatedSeries<T>(std::move(out));
}

/// Horner evaluation at a complex point.
template <Scalar T>
Complex eval(const TruncatedSeries<T>& p, Complex z) {
  Complex acc(0.0, 0.0);
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + to_complex(*it);
  return acc;
}

/// Exact-to-floating conversion of every coefficient.
inline TruncatedSeries<Complex> to_floating(const TruncatedSeries<Rational>& p) {
  std::vector<Complex> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(to_complex(c));
  return TruncatedSeries<Complex>(std::move(out));
}

/// Binomial coefficient C(n, k) as an exact integer.
Rational binomial(int n, int k);

/// 1/(1 - z)^m to order N: c_n = C(n + m - 1, m - 1), computed exactly.
template <Scalar T>
TruncatedSeries<T> binomial_expand(int m, int order) {
  if (m < 1) throw std::invalid_argument("binomial_expand requires m >= 1");
  std::vector<T> out(static_cast<std::size_t>(order) + 1);
  Rational c = 1;  // C(m - 1, m - 1)
  for (int n = 0; n <= order; ++n) {
    out[n] = from_rational<T>(c);
    // C(n + m, m - 1) = C(n + m - 1, m - 1) * (n + m) / (n + 1)
    c = c * (n + m) / (n + 1);
  }
  return TruncatedSeries<T>(std::move(out));
}

/// Taylor series of (alpha + beta z)/(1 + alpha beta z) from the closed form
///   c_0 = alpha,  c_k = beta (1 - alpha^2) (-alpha beta)^(k-1).
template <Scalar T>
TruncatedSeries<T> mobius_series(const MobiusDilatation& d, int order) {
  const Rational& alpha = d.alpha();
  const Rational beta = d.beta();
  std::vector<T> out(static_cast<std::size_t>(order) + 1);
  out[0] = from_rational<T>(alpha);
  Rational term = beta * (1 - alpha * alpha);
  const Rational ratio = -alpha * beta;
  for (int k = 1; k <= order; ++k) {
    out[k] = from_rational<T>(term);
    term *= ratio;
  }
  return TruncatedSeries<T>(std::move(out));
}

}  // namespace univalent
