#pragma once

// Catalog of the six sheared harmonic maps f = h + conj(g):
//
//   k0  harmonic Koebe function            F = z/(1-z)^2,           omega = z
//   s0  harmonic half-plane map            F = z/(1-z),             omega = -z
//   ka  generalized Koebe, a in (-1, 1)    F = (1-a) z/(1-z)^2,     omega = (a+z)/(1+az)
//   sa  generalized half-plane, a in (-1,1) F = (1+a) z/(1-z),      omega = (a-z)/(1-az)
//   kc  generalized Koebe, c > 0           ka with a = (1-c)/(1+c)
//   sc  generalized half-plane, c > 0      sa with a = (1-c)/(1+c)
//
// Koebe-family targets are sheared horizontally (F = h - g), half-plane
// targets vertically (F = h + g).
//
// Coefficients are exact rationals and keep their sign: the closed forms
// for b_n can be negative, and bound checks compare absolute values.

#include <optional>
#include <string_view>

#include "univalent/direction.hpp"
#include "univalent/mobius.hpp"
#include "univalent/scalar.hpp"
#include "univalent/series.hpp"

namespace univalent {

enum class MapName { k0, s0, kc, sc, ka, sa };

std::string_view to_string(MapName name);
std::optional<MapName> parse_map_name(std::string_view text);

enum class Family { koebe, half_plane };

/// Largest |z| accepted by the pointwise evaluators; every map in the
/// catalog is singular at z = 1.
inline constexpr double kMaxEvalRadius = 0.999;

class HarmonicMapSpec {
 public:
  MapName name() const noexcept { return name_; }
  Family family() const noexcept { return family_; }

  /// The user-facing parameter: a for ka/sa, c for kc/sc, empty for k0/s0.
  const std::optional<Rational>& param() const noexcept { return param_; }

  /// The Mobius parameter a of the dilatation; equals b_1.
  const Rational& dilatation_parameter() const noexcept { return dilatation_.alpha(); }

  /// Signed Taylor coefficient a_n of h (a_1 = 1; zero for n <= 0).
  Rational a_coef(int n) const;
  /// Signed Taylor coefficient b_n of g (b_1 = omega(0); zero for n <= 0).
  Rational b_coef(int n) const;

  const MobiusDilatation& dilatation() const noexcept { return dilatation_; }
  Direction shear_direction() const noexcept;

  /// Exact multiplier in front of z/(1-z)^2 or z/(1-z) in the shear target.
  const Rational& target_scale() const noexcept { return target_scale_; }

  /// Series of the conformal shear target F = h - e^{2i phi} g.
  template <Scalar T>
  TruncatedSeries<T> shear_target(int order) const {
    const int m = family_ == Family::koebe ? 2 : 1;
    const auto tail = binomial_expand<T>(m, std::max(order - 1, 0));
    std::vector<T> out(static_cast<std::size_t>(order) + 1, T(0));
    const T scale = from_rational<T>(target_scale_);
    for (int n = 1; n <= order; ++n) out[n] = scale * tail[n - 1];
    return TruncatedSeries<T>(std::move(out));
  }

  // Closed-form pointwise values; all require |z| <= kMaxEvalRadius.
  Complex h(Complex z) const;
  Complex g(Complex z) const;
  Complex h_prime(Complex z) const;
  Complex g_prime(Complex z) const;

 private:
  friend HarmonicMapSpec catalog(MapName, const std::optional<Rational>&);

  HarmonicMapSpec(MapName name, Family family, std::optional<Rational> param, Rational a,
                  Rational target_scale);

  MapName name_;
  Family family_;
  std::optional<Rational> param_;
  MobiusDilatation dilatation_;
  Rational target_scale_;
};

/// Builds a catalog entry. ka/sa take a in (-1, 1); kc/sc take c > 0; k0/s0
/// take no parameter. Throws ParamOutOfRange on a missing, superfluous or
/// out-of-range parameter.
HarmonicMapSpec catalog(MapName name, const std::optional<Rational>& param = std::nullopt);

/// a = (1 - c)/(1 + c). Throws ParamOutOfRange for c <= 0.
Rational equivalent_a_of_c(const Rational& c);

struct GridSample {
  Complex z;
  Complex f;        // h(z) + conj(g(z))
  double jacobian;  // |h'(z)|^2 - |g'(z)|^2
};

/// Closed-form evaluation of f and its Jacobian. Throws DomainError when
/// |z| > kMaxEvalRadius.
GridSample eval_map(const HarmonicMapSpec& spec, Complex z);

/// omega(z) = g'(z)/h'(z), evaluated from the Mobius form. Throws
/// DerivativeZero when |h'(z)| < 1e-14.
Complex dilatation_value(const HarmonicMapSpec& spec, Complex z);

}  // namespace univalent
