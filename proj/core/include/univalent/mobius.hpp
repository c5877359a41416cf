#pragma once

#include "univalent/scalar.hpp"

namespace univalent {

/// The disk self-map omega(z) = (alpha + beta z) / (1 + alpha beta z) with
/// |alpha| < 1 and beta in {+1, -1}. beta = +1 is the Koebe-family
/// dilatation (a + z)/(1 + a z); beta = -1 is the half-plane family
/// dilatation (a - z)/(1 - a z).
class MobiusDilatation {
 public:
  /// Throws ParamOutOfRange unless |alpha| < 1 and beta is +1 or -1.
  MobiusDilatation(Rational alpha, int beta);

  const Rational& alpha() const noexcept { return alpha_; }
  int beta() const noexcept { return beta_; }

  Complex operator()(Complex z) const;

  friend bool operator==(const MobiusDilatation&, const MobiusDilatation&) = default;

 private:
  Rational alpha_;
  int beta_;
};

}  // namespace univalent
