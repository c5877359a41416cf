#pragma once

#include <numbers>

#include "univalent/errors.hpp"
#include "univalent/scalar.hpp"

namespace univalent {

/// Shear direction phi in [0, pi). The rotation factor e^{2i phi} is exact
/// (+1 or -1) for the horizontal and vertical directions; any other angle
/// is available in floating mode only.
class Direction {
 public:
  static Direction horizontal() { return Direction(Kind::horizontal, 0.0); }
  static Direction vertical() { return Direction(Kind::vertical, std::numbers::pi / 2); }
  /// Throws ParamOutOfRange for phi outside [0, pi).
  static Direction from_radians(double phi);

  double radians() const noexcept { return phi_; }
  bool is_exact() const noexcept { return kind_ != Kind::general; }

  /// e^{2i phi}. Throws NotRepresentable for a general angle in exact mode.
  template <Scalar T>
  T rotation() const {
    switch (kind_) {
      case Kind::horizontal:
        return T(1);
      case Kind::vertical:
        return T(-1);
      case Kind::general:
        break;
    }
    if constexpr (is_exact_v<T>) {
      throw NotRepresentable("exact mode supports only phi = 0 or phi = pi/2");
    } else {
      return std::polar(1.0, 2.0 * phi_);
    }
  }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  enum class Kind { horizontal, vertical, general };
  Direction(Kind kind, double phi) : kind_(kind), phi_(phi) {}

  Kind kind_;
  double phi_;
};

}  // namespace univalent
