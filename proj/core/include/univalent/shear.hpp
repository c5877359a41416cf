#pragma once

// Shear construction. Given a conformal target F (F(0) = 0), a dilatation
// omega (|omega(0)| < 1) and a direction phi, the harmonic map
// f = h + conj(g) with
//
//     h - e^{2i phi} g = F,    g' = omega h'
//
// is obtained from h' = F' / (1 - e^{2i phi} omega), g' = omega h', with
// integration constants chosen so that h(0) = g(0) = 0. When F is convex in
// direction phi and |omega| < 1 on the disk the result is univalent.

#include <algorithm>
#include <functional>

#include "univalent/direction.hpp"
#include "univalent/errors.hpp"
#include "univalent/mappings.hpp"
#include "univalent/scalar.hpp"
#include "univalent/series.hpp"

namespace univalent {

template <Scalar T>
struct ShearProblem {
  TruncatedSeries<T> target;  // F, with F(0) = 0
  TruncatedSeries<T> omega;   // dilatation, |omega(0)| < 1
  Direction direction;
};

template <Scalar T>
struct ShearResult {
  TruncatedSeries<T> h;
  TruncatedSeries<T> g;
  magnitude_t<T> residual;  // max_n |(h - e^{2i phi} g - F)_n|
};

/// max_n |(h - e^{2i phi} g - F)_n| over the common order of the inputs.
template <Scalar T>
magnitude_t<T> reconstruct_residual(const TruncatedSeries<T>& h, const TruncatedSeries<T>& g,
                                    Direction direction, const TruncatedSeries<T>& target) {
  const T rot = direction.rotation<T>();
  const auto diff = h - rot * g - target;
  magnitude_t<T> worst(0);
  for (const auto& c : diff.coefficients()) worst = std::max(worst, magnitude(c));
  return worst;
}

template <Scalar T>
ShearResult<T> shear(const ShearProblem<T>& problem) {
  const auto& F = problem.target;
  const auto& omega = problem.omega;
  if constexpr (is_exact_v<T>) {
    if (F[0] != 0) throw BadTarget("shear target must vanish at the origin");
    if (magnitude(omega[0]) >= 1) throw BadDilatation("|omega(0)| must be below 1");
  } else {
    if (std::abs(F[0]) > kReciprocalThreshold) {
      throw BadTarget("shear target must vanish at the origin");
    }
    if (std::abs(omega[0]) >= 1.0) throw BadDilatation("|omega(0)| must be below 1");
  }

  const T rot = problem.direction.template rotation<T>();
  const auto one = TruncatedSeries<T>::constant(T(1), omega.order());
  const auto h_prime = differentiate(F) * reciprocal(one - rot * omega);
  const auto g_prime = omega * h_prime;
  auto h = integrate(h_prime);
  auto g = integrate(g_prime);
  auto residual = reconstruct_residual(h, g, problem.direction, F);
  return {std::move(h), std::move(g), std::move(residual)};
}

/// The shear problem whose solution is the catalog map `spec`.
template <Scalar T>
ShearProblem<T> shear_problem(const HarmonicMapSpec& spec, int order = kDefaultOrder) {
  return {spec.shear_target<T>(order), mobius_series<T>(spec.dilatation(), order),
          spec.shear_direction()};
}

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);

struct ConvexityReport {
  Verdict verdict;
  int sign_changes;         // all monotonicity changes around the curve
  int robust_sign_changes;  // changes between runs that clear the thresholds
};

/// Run-length and amplitude thresholds for a monotone run of Im(e^{-i phi} F)
/// to count as a robust turn rather than sampling jitter.
inline constexpr int kMinRunSamples = 4;
inline constexpr double kMinRunAmplitude = 1e-9;

/// Sampling test for "F maps |z| < r onto a domain convex in direction phi".
/// Samples w_j = e^{-i phi} F(r e^{2 pi i j / M}) and counts the turns of
/// Im(w_j) around the closed curve: exactly two turns means every line
/// parallel to e^{i phi} meets the image in one segment (pass); four or
/// more robust turns means some line meets it in several pieces (fail);
/// anything else is inconclusive. Requires 0 < r < 1 and M >= 256.
ConvexityReport convex_direction_heuristic(const std::function<Complex(Complex)>& target,
                                           double phi, double r, int samples);

}  // namespace univalent
