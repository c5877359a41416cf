#include "univalent/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "univalent/errors.hpp"
#include "univalent/parallel.hpp"

namespace univalent {

namespace {

constexpr std::array<std::pair<Conjecture, std::string_view>, 5> kTags{{
    {Conjecture::css0, "css0"},
    {Conjecture::muir, "muir"},
    {Conjecture::liu_ponnusamy, "liu-ponnusamy"},
    {Conjecture::sh_strict, "sh-strict"},
    {Conjecture::improved, "improved"},
}};

Rational abs(const Rational& q) { return boost::multiprecision::abs(q); }

struct Bounds {
  Rational a;
  Rational b;
};

struct BoundSetup {
  bool parametric = false;
  std::optional<Rational> parameter;
  std::function<Bounds(int)> at;
};

BoundSetup setup_bounds(const HarmonicMapSpec& spec, Conjecture tag,
                        const std::optional<Rational>& bound_a) {
  const std::string name(to_string(spec.name()));
  if (bound_a && tag != Conjecture::improved) {
    throw IncompatibleTag("only the improved conjecture takes an explicit parameter");
  }
  const Rational b1 = spec.b_coef(1);
  BoundSetup s;
  switch (tag) {
    case Conjecture::css0:
      if (b1 != 0) throw IncompatibleTag("css0 applies to maps with b_1 = 0, not " + name);
      s.at = [](int n) {
        const Rational m = n;
        return Bounds{(2 * m + 1) * (m + 1) / 6, (2 * m - 1) * (m - 1) / 6};
      };
      break;
    case Conjecture::muir: {
      if (spec.family() != Family::half_plane) {
        throw IncompatibleTag("muir bounds apply to the half-plane family, not " + name);
      }
      const Rational c = (1 - b1) / (1 + b1);
      s.parameter = c;
      s.at = [c](int n) {
        const Rational m = n;
        return Bounds{(1 + m * c) / (1 + c), abs(1 - m * c) / (1 + c)};
      };
      break;
    }
    case Conjecture::liu_ponnusamy: {
      if (spec.family() != Family::half_plane) {
        throw IncompatibleTag("liu-ponnusamy bounds apply to the half-plane family, not " + name);
      }
      s.parameter = b1;
      s.at = [a = b1](int n) {
        const Rational m = n;
        return Bounds{((1 + a) + m * (1 - a)) / 2, abs((1 + a) - m * (1 - a)) / 2};
      };
      break;
    }
    case Conjecture::sh_strict:
      s.at = [](int n) {
        const Rational m = n;
        const Rational bound = (2 * m * m + 1) / 3;
        return Bounds{bound, bound};
      };
      break;
    case Conjecture::improved: {
      const Rational a = bound_a.value_or(b1);
      if (abs(a) >= 1) throw ParamOutOfRange("improved bound needs a in (-1, 1)");
      s.parametric = bound_a.has_value();
      s.parameter = a;
      s.at = [a](int n) {
        const Rational m = n;
        return Bounds{(2 * (1 + a) * m * m + 3 * (1 - a) * m + (1 + a)) / 6,
                      abs(2 * (1 + a) * m * m + 3 * (a - 1) * m + (1 + a)) / 6};
      };
      break;
    }
  }
  return s;
}

void check_n_max(int n_max) {
  if (n_max < 2) throw std::invalid_argument("bound checks need n_max >= 2");
}

}  // namespace

std::string_view to_string(Conjecture tag) {
  for (const auto& [t, s] : kTags) {
    if (t == tag) return s;
  }
  return "?";
}

std::optional<Conjecture> parse_conjecture(std::string_view text) {
  for (const auto& [t, s] : kTags) {
    if (s == text) return t;
  }
  return std::nullopt;
}

BoundReport<Rational> check_bounds(const HarmonicMapSpec& spec, Conjecture tag, int n_max,
                                   const std::optional<Rational>& bound_a) {
  check_n_max(n_max);
  const auto setup = setup_bounds(spec, tag, bound_a);
  BoundReport<Rational> report{std::string(to_string(spec.name())), tag, setup.parametric,
                               setup.parameter, {}};
  report.rows.reserve(static_cast<std::size_t>(n_max) - 1);
  const bool strict = is_strict(tag);
  for (int n = 2; n <= n_max; ++n) {
    auto [a_bound, b_bound] = setup.at(n);
    Rational abs_a = abs(spec.a_coef(n));
    Rational abs_b = abs(spec.b_coef(n));
    const bool ok = strict ? (abs_a < a_bound && abs_b < b_bound)
                           : (abs_a <= a_bound && abs_b <= b_bound);
    Rational a_slack = a_bound - abs_a;
    Rational b_slack = b_bound - abs_b;
    report.rows.push_back({n, std::move(abs_a), std::move(a_bound), std::move(a_slack),
                           std::move(abs_b), std::move(b_bound), std::move(b_slack),
                           ok ? Verdict::pass : Verdict::fail});
  }
  return report;
}

BoundReport<double> check_bounds_float(const HarmonicMapSpec& spec, Conjecture tag, int n_max,
                                       const std::optional<Rational>& bound_a) {
  check_n_max(n_max);
  const auto setup = setup_bounds(spec, tag, bound_a);
  BoundReport<double> report{std::string(to_string(spec.name())), tag, setup.parametric,
                             setup.parameter, {}};
  const bool strict = is_strict(tag);
  const auto judge = [strict](double slack, double bound) {
    const double tol = kFloatBoundTolerance * std::max(1.0, std::abs(bound));
    if (strict) {
      if (slack > tol) return Verdict::pass;
      return slack < -tol ? Verdict::fail : Verdict::inconclusive;
    }
    return slack >= -tol ? Verdict::pass : Verdict::fail;
  };
  for (int n = 2; n <= n_max; ++n) {
    const auto bounds = setup.at(n);
    const double a_bound = to_double(bounds.a);
    const double b_bound = to_double(bounds.b);
    const double abs_a = std::abs(to_double(spec.a_coef(n)));
    const double abs_b = std::abs(to_double(spec.b_coef(n)));
    const Verdict va = judge(a_bound - abs_a, a_bound);
    const Verdict vb = judge(b_bound - abs_b, b_bound);
    Verdict v = Verdict::pass;
    if (va == Verdict::fail || vb == Verdict::fail) {
      v = Verdict::fail;
    } else if (va == Verdict::inconclusive || vb == Verdict::inconclusive) {
      v = Verdict::inconclusive;
    }
    report.rows.push_back(
        {n, abs_a, a_bound, a_bound - abs_a, abs_b, b_bound, b_bound - abs_b, v});
  }
  return report;
}

Rational sharpness_gap(int n, const Rational& a) {
  if (n < 2) throw std::invalid_argument("sharpness gap needs n >= 2");
  const auto spec = catalog(MapName::ka, a);
  const Rational m = n;
  Rational gap = (2 * m * m + 1) / 3 - spec.a_coef(n);
  if (gap != (1 - a) * (2 * m - 1) * (m - 1) / 6) {
    throw std::logic_error("sharpness gap disagrees with (1 - a)(2n - 1)(n - 1)/6");
  }
  return gap;
}

std::vector<double> default_scan_radii() {
  constexpr int kCount = 24;
  constexpr double kInner = 0.9;  // 1 - 0.1
  constexpr double kOuter = 0.01;  // 1 - 0.99
  std::vector<double> radii(kCount);
  for (int k = 0; k < kCount; ++k) {
    radii[k] = 1.0 - kInner * std::pow(kOuter / kInner, static_cast<double>(k) / (kCount - 1));
  }
  radii.front() = 0.1;
  radii.back() = 0.99;
  return radii;
}

std::vector<Complex> polar_grid(std::span<const double> radii, int angles) {
  if (angles < 1) throw std::invalid_argument("polar grid needs at least one angle");
  std::vector<Complex> points;
  points.reserve(radii.size() * static_cast<std::size_t>(angles));
  for (double r : radii) {
    for (int k = 0; k < angles; ++k) {
      points.push_back(std::polar(r, 2.0 * std::numbers::pi * k / angles));
    }
  }
  return points;
}

ScanResult jacobian_scan(const HarmonicMapSpec& spec, std::span<const double> radii, int angles,
                         unsigned threads) {
  if (radii.empty()) throw std::invalid_argument("jacobian scan needs at least one radius");
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("scan radii must lie in [0, 1)");
  }
  if (angles < 1) throw std::invalid_argument("jacobian scan needs at least one angle");

  // Lexicographic keys (value, radius, angle index) make the reduction
  // independent of how the grid is partitioned.
  using Key = std::tuple<double, double, int>;
  struct Partial {
    Key min_j{INFINITY, 0.0, 0};
    Key max_w{INFINITY, 0.0, 0};  // value stored negated
  };

  const std::size_t per_ring = static_cast<std::size_t>(angles);
  const std::size_t total = radii.size() * per_ring;
  std::vector<Partial> partials(std::max(threads, 1u));
  parallel_chunks(total, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    Partial local;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const double r = radii[idx / per_ring];
      const int k = static_cast<int>(idx % per_ring);
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / angles);
      const auto sample = eval_map(spec, z);
      local.min_j = std::min(local.min_j, Key{sample.jacobian, r, k});
      local.max_w = std::min(local.max_w, Key{-std::abs(spec.dilatation()(z)), r, k});
    }
    partials[chunk] = local;
  });

  Partial best;
  for (const auto& p : partials) {
    best.min_j = std::min(best.min_j, p.min_j);
    best.max_w = std::min(best.max_w, p.max_w);
  }
  const auto point = [angles](const Key& key) {
    return std::polar(std::get<1>(key), 2.0 * std::numbers::pi * std::get<2>(key) / angles);
  };
  return {std::get<0>(best.min_j), point(best.min_j), -std::get<0>(best.max_w),
          point(best.max_w)};
}

Verdict injectivity_sample(const std::function<Complex(Complex)>& map,
                           std::span<const Complex> grid) {
  if (grid.size() > kMaxInjectivityPoints) {
    throw std::invalid_argument("injectivity sampling is limited to 5000 points");
  }
  std::vector<Complex> image;
  image.reserve(grid.size());
  for (const auto& z : grid) image.push_back(map(z));
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (std::abs(image[i] - image[j]) <= kInjectivitySeparation) return Verdict::fail;
    }
  }
  return Verdict::pass;
}

Verdict injectivity_sample(const HarmonicMapSpec& spec, std::span<const Complex> grid) {
  return injectivity_sample([&spec](Complex z) { return eval_map(spec, z).f; }, grid);
}

}  // namespace univalent
