#pragma once

// Coefficient bound checks for the catalog maps and Jacobian / injectivity
// scans on polar grids.
//
// Conjectures and the bounds they put on |a_n|, |b_n| (n >= 2):
//   css0           (2n+1)(n+1)/6,            (2n-1)(n-1)/6           maps with b_1 = 0
//   muir           (1+nc)/(1+c),             |1-nc|/(1+c)            half-plane family
//   liu-ponnusamy  ((1+a)+n(1-a))/2,         |(1+a)-n(1-a)|/2        half-plane family
//   sh-strict      (2n^2+1)/3 (strict),      (2n^2+1)/3 (strict)     any map
//   improved       (2(1+a)n^2+3(1-a)n+(1+a))/6,
//                  |2(1+a)n^2+3(a-1)n+(1+a)|/6                        any map
//
// The family parameters are bound to the map's own b_1 (a = b_1,
// c = (1-a)/(1+a)). For `improved`, an explicit a may be supplied instead;
// such reports are marked parametric.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "univalent/mappings.hpp"
#include "univalent/scalar.hpp"
#include "univalent/shear.hpp"

namespace univalent {

enum class Conjecture { css0, muir, liu_ponnusamy, sh_strict, improved };

std::string_view to_string(Conjecture tag);
std::optional<Conjecture> parse_conjecture(std::string_view text);

/// Whether `tag` compares with strict inequality.
constexpr bool is_strict(Conjecture tag) { return tag == Conjecture::sh_strict; }

template <class M>
struct BoundRow {
  int n;
  M abs_a, a_bound, a_slack;
  M abs_b, b_bound, b_slack;
  Verdict verdict;
};

/// M = Rational for the exact report, double for the floating one.
template <class M>
struct BoundReport {
  std::string map_name;
  Conjecture tag;
  bool parametric = false;
  std::optional<Rational> bound_parameter;  // the a (or c for muir) the bounds use
  std::vector<BoundRow<M>> rows;

  bool all_pass() const {
    for (const auto& r : rows) {
      if (r.verdict != Verdict::pass) return false;
    }
    return true;
  }
};

/// Exact check for n = 2..n_max. Throws IncompatibleTag when the tag does
/// not apply to the map, or when an explicit parameter is given for any tag
/// but `improved`.
BoundReport<Rational> check_bounds(const HarmonicMapSpec& spec, Conjecture tag, int n_max,
                                   const std::optional<Rational>& bound_a = std::nullopt);

/// Relative tolerance of the floating check.
inline constexpr double kFloatBoundTolerance = 1e-12;

/// Floating-point variant of check_bounds. It reports slack but never
/// adjudicates strictness: a strict row whose slack is within tolerance of
/// zero is inconclusive.
BoundReport<double> check_bounds_float(const HarmonicMapSpec& spec, Conjecture tag, int n_max,
                                       const std::optional<Rational>& bound_a = std::nullopt);

/// (2n^2 + 1)/3 - a_n(k_a). Throws std::logic_error if the result differs
/// from the closed form (1 - a)(2n - 1)(n - 1)/6.
Rational sharpness_gap(int n, const Rational& a);

/// 24 radii from 0.1 to 0.99 with 1 - r spaced logarithmically, so the grid
/// is densest near the boundary.
std::vector<double> default_scan_radii();
inline constexpr int kDefaultScanAngles = 360;

struct ScanResult {
  double min_jacobian;
  Complex argmin_jacobian;
  double max_dilatation;
  Complex argmax_dilatation;
};

/// Min of J_f and max of |omega| over {r e^{2 pi i k / angles}}. Ties resolve
/// to the smallest radius, then the smallest angle, so the result does not
/// depend on `threads`.
ScanResult jacobian_scan(const HarmonicMapSpec& spec, std::span<const double> radii, int angles,
                         unsigned threads = 1);

/// Points r e^{2 pi i k / angles} in radius-major order.
std::vector<Complex> polar_grid(std::span<const double> radii, int angles);

inline constexpr std::size_t kMaxInjectivityPoints = 5000;
inline constexpr double kInjectivitySeparation = 1e-9;

/// Pass iff all pairwise image distances exceed kInjectivitySeparation.
/// Quadratic; throws std::invalid_argument above kMaxInjectivityPoints.
Verdict injectivity_sample(const std::function<Complex(Complex)>& map,
                           std::span<const Complex> grid);
Verdict injectivity_sample(const HarmonicMapSpec& spec, std::span<const Complex> grid);

}  // namespace univalent
