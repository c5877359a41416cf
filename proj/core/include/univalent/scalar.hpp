#pragma once

// Scalar modes. Every series and coefficient computation in the library is
// written once against the `Scalar` concept and instantiated twice:
//   - Rational: exact arithmetic, canonical num/den with den >= 1.
//   - Complex:  IEEE double complex.

#include <complex>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace univalent {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Complex = std::complex<double>;

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, Complex>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

/// Type of |x|: exact for rationals, double for complex values.
template <Scalar T>
using magnitude_t = std::conditional_t<is_exact_v<T>, Rational, double>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Complex to_complex(const Rational& q) { return {to_double(q), 0.0}; }
inline Complex to_complex(const Complex& z) { return z; }

template <Scalar T>
T from_rational(const Rational& q) {
  if constexpr (is_exact_v<T>) {
    return q;
  } else {
    return to_complex(q);
  }
}

template <Scalar T>
magnitude_t<T> magnitude(const T& x) {
  if constexpr (is_exact_v<T>) {
    return boost::multiprecision::abs(x);
  } else {
    return std::abs(x);
  }
}

inline double to_double(double x) { return x; }

/// `num/den` in lowest terms; integers print without a denominator.
std::string to_string(const Rational& q);

/// Parses "3", "-1/2", "0.25", "-.5", "1e-3". Decimals convert exactly as
/// written (0.1 is 1/10, not the nearest double). Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace univalent
