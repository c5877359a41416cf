#include "univalent/mobius.hpp"

#include <cmath>
#include <utility>

#include "univalent/direction.hpp"
#include "univalent/errors.hpp"

namespace univalent {

MobiusDilatation::MobiusDilatation(Rational alpha, int beta) : alpha_(std::move(alpha)), beta_(beta) {
  if (beta_ != 1 && beta_ != -1) throw ParamOutOfRange("Mobius beta must be +1 or -1");
  if (boost::multiprecision::abs(alpha_) >= 1) {
    throw ParamOutOfRange("Mobius alpha must satisfy |alpha| < 1, got " + to_string(alpha_));
  }
}

Complex MobiusDilatation::operator()(Complex z) const {
  const double a = to_double(alpha_);
  const double b = beta_;
  return (a + b * z) / (1.0 + a * b * z);
}

Direction Direction::from_radians(double phi) {
  if (!(phi >= 0.0 && phi < std::numbers::pi)) {
    throw ParamOutOfRange("direction must lie in [0, pi)");
  }
  if (phi == 0.0) return horizontal();
  if (phi == std::numbers::pi / 2) return vertical();
  return Direction(Kind::general, phi);
}

}  // namespace univalent
