#include "univalent/mappings.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "univalent/errors.hpp"

namespace univalent {

namespace {

constexpr std::array<std::pair<MapName, std::string_view>, 6> kNames{{
    {MapName::k0, "k0"},
    {MapName::s0, "s0"},
    {MapName::kc, "kc"},
    {MapName::sc, "sc"},
    {MapName::ka, "ka"},
    {MapName::sa, "sa"},
}};

void check_radius(Complex z) {
  if (!(std::abs(z) <= kMaxEvalRadius + 1e-12)) {
    throw DomainError("evaluation point outside |z| <= 0.999");
  }
}

}  // namespace

std::string_view to_string(MapName name) {
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return "?";
}

std::optional<MapName> parse_map_name(std::string_view text) {
  for (const auto& [n, s] : kNames) {
    if (s == text) return n;
  }
  return std::nullopt;
}

Rational equivalent_a_of_c(const Rational& c) {
  if (c <= 0) throw ParamOutOfRange("c must be positive, got " + to_string(c));
  return (1 - c) / (1 + c);
}

HarmonicMapSpec::HarmonicMapSpec(MapName name, Family family, std::optional<Rational> param,
                                 Rational a, Rational target_scale)
    : name_(name),
      family_(family),
      param_(std::move(param)),
      dilatation_(std::move(a), family == Family::koebe ? 1 : -1),
      target_scale_(std::move(target_scale)) {}

HarmonicMapSpec catalog(MapName name, const std::optional<Rational>& param) {
  const bool takes_param = name != MapName::k0 && name != MapName::s0;
  if (takes_param && !param) {
    throw ParamOutOfRange(std::string(to_string(name)) + " requires a parameter");
  }
  if (!takes_param && param) {
    throw ParamOutOfRange(std::string(to_string(name)) + " takes no parameter");
  }

  const bool a_param = name == MapName::ka || name == MapName::sa;
  if (a_param && boost::multiprecision::abs(*param) >= 1) {
    throw ParamOutOfRange("a must lie in (-1, 1), got " + to_string(*param));
  }
  Rational a = 0;
  if (a_param) a = *param;
  if (name == MapName::kc || name == MapName::sc) a = equivalent_a_of_c(*param);

  const Family family = (name == MapName::k0 || name == MapName::ka || name == MapName::kc)
                            ? Family::koebe
                            : Family::half_plane;
  // Koebe family: F = (1 - a) z/(1-z)^2; half-plane family: F = (1 + a) z/(1-z).
  Rational scale = family == Family::koebe ? Rational(1 - a) : Rational(1 + a);
  return HarmonicMapSpec(name, family, param, std::move(a), std::move(scale));
}

Direction HarmonicMapSpec::shear_direction() const noexcept {
  return family_ == Family::koebe ? Direction::horizontal() : Direction::vertical();
}

Rational HarmonicMapSpec::a_coef(int n) const {
  if (n <= 0) return 0;
  const Rational m = n;
  switch (name_) {
    case MapName::k0:
      return (2 * m + 1) * (m + 1) / 6;
    case MapName::s0:
      return (m + 1) / 2;
    case MapName::ka: {
      const Rational& a = *param_;
      return (2 * (1 + a) * m * m + 3 * (1 - a) * m + (1 + a)) / 6;
    }
    case MapName::sa: {
      const Rational& a = *param_;
      return ((1 + a) + m * (1 - a)) / 2;
    }
    case MapName::kc: {
      const Rational& c = *param_;
      return (2 * m * m + 3 * c * m + 1) / (3 * (1 + c));
    }
    case MapName::sc: {
      const Rational& c = *param_;
      return (1 + m * c) / (1 + c);
    }
  }
  return 0;
}

Rational HarmonicMapSpec::b_coef(int n) const {
  if (n <= 0) return 0;
  const Rational m = n;
  switch (name_) {
    case MapName::k0:
      return (2 * m - 1) * (m - 1) / 6;
    case MapName::s0:
      return -(m - 1) / 2;
    case MapName::ka: {
      const Rational& a = *param_;
      return (2 * (1 + a) * m * m + 3 * (a - 1) * m + (1 + a)) / 6;
    }
    case MapName::sa: {
      const Rational& a = *param_;
      return ((1 + a) - m * (1 - a)) / 2;
    }
    case MapName::kc: {
      const Rational& c = *param_;
      return (2 * m * m - 3 * c * m + 1) / (3 * (1 + c));
    }
    case MapName::sc: {
      const Rational& c = *param_;
      return (1 - m * c) / (1 + c);
    }
  }
  return 0;
}

// The pointwise forms below are the rational closed forms of each map, one
// per catalog name, independent of the series machinery.

Complex HarmonicMapSpec::h(Complex z) const {
  check_radius(z);
  const Complex w = 1.0 - z;
  switch (name_) {
    case MapName::k0:
      return (z - z * z / 2.0 + z * z * z / 6.0) / (w * w * w);
    case MapName::s0:
      return (z - z * z / 2.0) / (w * w);
    case MapName::ka: {
      const double a = to_double(*param_);
      return (z + (a - 1) / 2 * z * z + (1 + a) / 6 * z * z * z) / (w * w * w);
    }
    case MapName::sa: {
      const double a = to_double(*param_);
      return (z - (1 + a) / 2 * z * z) / (w * w);
    }
    case MapName::kc: {
      const double c = to_double(*param_);
      return (z - c / (1 + c) * z * z + 1 / (3 * (1 + c)) * z * z * z) / (w * w * w);
    }
    case MapName::sc: {
      const double c = to_double(*param_);
      return ((1 + c) * z - z * z) / ((1 + c) * w * w);
    }
  }
  return {};
}

Complex HarmonicMapSpec::g(Complex z) const {
  check_radius(z);
  const Complex w = 1.0 - z;
  switch (name_) {
    case MapName::k0:
      return (z * z / 2.0 + z * z * z / 6.0) / (w * w * w);
    case MapName::s0:
      return -(z * z / 2.0) / (w * w);
    case MapName::ka: {
      const double a = to_double(*param_);
      return (a * z + (1 - a) / 2 * z * z + (1 + a) / 6 * z * z * z) / (w * w * w);
    }
    case MapName::sa: {
      const double a = to_double(*param_);
      return (a * z - (1 + a) / 2 * z * z) / (w * w);
    }
    case MapName::kc: {
      const double c = to_double(*param_);
      const double A = (1 - c) / (1 + c);
      return (A * z + c / (1 + c) * z * z + 1 / (3 * (1 + c)) * z * z * z) / (w * w * w);
    }
    case MapName::sc: {
      const double c = to_double(*param_);
      return ((1 - c) * z - z * z) / ((1 + c) * w * w);
    }
  }
  return {};
}

Complex HarmonicMapSpec::h_prime(Complex z) const {
  check_radius(z);
  const double a = to_double(dilatation_parameter());
  const Complex w = 1.0 - z;
  if (family_ == Family::koebe) return (1.0 + z) * (1.0 + a * z) / (w * w * w * w);
  return (1.0 - a * z) / (w * w * w);
}

Complex HarmonicMapSpec::g_prime(Complex z) const {
  check_radius(z);
  const double a = to_double(dilatation_parameter());
  const Complex w = 1.0 - z;
  if (family_ == Family::koebe) return (a + z) * (1.0 + z) / (w * w * w * w);
  return (a - z) / (w * w * w);
}

GridSample eval_map(const HarmonicMapSpec& spec, Complex z) {
  const Complex hp = spec.h_prime(z);
  const Complex gp = spec.g_prime(z);
  return {z, spec.h(z) + std::conj(spec.g(z)), std::norm(hp) - std::norm(gp)};
}

Complex dilatation_value(const HarmonicMapSpec& spec, Complex z) {
  if (std::abs(spec.h_prime(z)) < 1e-14) {
    throw DerivativeZero("h' vanishes at the requested point");
  }
  return spec.dilatation()(z);
}

}  // namespace univalent
