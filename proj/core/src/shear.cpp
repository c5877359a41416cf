#include "univalent/shear.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace univalent {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

struct Run {
  int sign;
  int length;
  double amplitude;
};

// Number of sign changes around a cycle of runs after merging neighbours of
// equal sign. A cycle with a single sign has no changes.
int cyclic_changes(const std::vector<Run>& runs) {
  if (runs.empty()) return 0;
  int changes = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].sign != runs[(i + 1) % runs.size()].sign) ++changes;
  }
  return changes;
}

}  // namespace

ConvexityReport convex_direction_heuristic(const std::function<Complex(Complex)>& target,
                                           double phi, double r, int samples) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("radius must lie in (0, 1)");
  if (samples < 256) throw std::invalid_argument("at least 256 samples are required");

  const Complex unrotate = std::polar(1.0, -phi);
  std::vector<double> height(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / samples;
    height[j] = (unrotate * target(std::polar(r, theta))).imag();
  }

  // Signs of the cyclic first differences; exact zeros carry no direction.
  std::vector<double> diff(height.size());
  for (std::size_t j = 0; j < height.size(); ++j) {
    diff[j] = height[(j + 1) % height.size()] - height[j];
  }

  // Start the scan right after a sign change so no run wraps around.
  const auto sign_of = [](double d) { return d > 0 ? 1 : (d < 0 ? -1 : 0); };
  std::size_t start = 0;
  int prev = 0;
  bool found = false;
  for (std::size_t j = 0; j < 2 * diff.size() && !found; ++j) {
    const int s = sign_of(diff[j % diff.size()]);
    if (s == 0) continue;
    if (prev != 0 && s != prev) {
      start = j % diff.size();
      found = true;
    }
    prev = s;
  }
  if (!found) return {Verdict::inconclusive, 0, 0};

  std::vector<Run> runs;
  for (std::size_t k = 0; k < diff.size(); ++k) {
    const double d = diff[(start + k) % diff.size()];
    const int s = sign_of(d);
    if (s == 0) {
      if (!runs.empty()) ++runs.back().length;
      continue;
    }
    if (runs.empty() || runs.back().sign != s) runs.push_back({s, 0, 0.0});
    ++runs.back().length;
    runs.back().amplitude += std::abs(d);
  }

  std::vector<Run> robust;
  for (const auto& run : runs) {
    if (run.length >= kMinRunSamples && run.amplitude > kMinRunAmplitude) robust.push_back(run);
  }

  const int all_changes = cyclic_changes(runs);
  const int robust_changes = cyclic_changes(robust);
  Verdict verdict = Verdict::inconclusive;
  if (all_changes == 2 && robust_changes == 2) {
    verdict = Verdict::pass;
  } else if (robust_changes >= 4) {
    verdict = Verdict::fail;
  }
  return {verdict, all_changes, robust_changes};
}

}  // namespace univalent
