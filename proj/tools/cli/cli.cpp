#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "format.hpp"
#include "univalent/mappings.hpp"
#include "univalent/parallel.hpp"
#include "univalent/series.hpp"
#include "univalent/shear.hpp"
#include "univalent/verify.hpp"

#ifndef UNIVALENT_VERSION
#define UNIVALENT_VERSION "0.0.0"
#endif

namespace univalent::cli {

namespace {

constexpr int kMaxCoeffs = 10000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { exact, floating };

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  throw UsageError("--mode must be 'exact' or 'float'");
}

std::string_view mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

void emit(std::ostream& out, std::string_view command, Mode mode, Json payload) {
  Json envelope;
  envelope["toolVersion"] = UNIVALENT_VERSION;
  envelope["command"] = command;
  envelope["mode"] = mode_name(mode);
  envelope["payload"] = std::move(payload);
  out << envelope.dump(2) << '\n';
}

HarmonicMapSpec resolve_map(const std::string& name, const std::string& param) {
  const auto map = parse_map_name(name);
  if (!map) throw UsageError("unknown map '" + name + "' (expected k0, s0, ka, sa, kc, sc)");
  std::optional<Rational> value;
  if (!param.empty()) value = parse_rational(param);
  return catalog(*map, value);
}

Json param_json(const HarmonicMapSpec& spec) {
  return spec.param() ? to_json(*spec.param()) : Json(nullptr);
}

// ---------------------------------------------------------------- coeffs

struct CoeffsOptions {
  std::string map;
  std::string param;
  int nmax = 10;
  std::string format = "json";
  std::string mode = "exact";
};

int run_coeffs(const CoeffsOptions& o, std::ostream& out) {
  const auto spec = resolve_map(o.map, o.param);
  const Mode mode = parse_mode(o.mode);
  if (o.nmax < 1 || o.nmax > kMaxCoeffs) throw UsageError("--nmax must lie in [1, 10000]");

  if (o.format == "csv") {
    out << "n,a_n,b_n\n";
    for (int n = 1; n <= o.nmax; ++n) {
      if (mode == Mode::exact) {
        out << n << ',' << csv_cell(spec.a_coef(n)) << ',' << csv_cell(spec.b_coef(n)) << '\n';
      } else {
        out << n << ',' << csv_cell(to_double(spec.a_coef(n))) << ','
            << csv_cell(to_double(spec.b_coef(n))) << '\n';
      }
    }
    return kPass;
  }
  if (o.format != "json") throw UsageError("--format must be 'json' or 'csv'");

  Json rows = Json::array();
  for (int n = 1; n <= o.nmax; ++n) {
    Json row;
    row["n"] = n;
    if (mode == Mode::exact) {
      row["a"] = to_json(spec.a_coef(n));
      row["b"] = to_json(spec.b_coef(n));
    } else {
      row["a"] = to_double(spec.a_coef(n));
      row["b"] = to_double(spec.b_coef(n));
    }
    rows.push_back(std::move(row));
  }
  Json payload;
  payload["map"] = to_string(spec.name());
  payload["param"] = param_json(spec);
  payload["nmax"] = o.nmax;
  payload["rows"] = std::move(rows);
  emit(out, "coeffs", mode, std::move(payload));
  return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string map;
  std::string param;
  std::string conjecture;
  std::string bound_a;
  int nmax = 50;
  bool scan_jacobian = false;
  std::string mode = "exact";
};

template <class M>
Json report_json(const BoundReport<M>& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["n"] = r.n;
    row["absA"] = to_json(r.abs_a);
    row["aBound"] = to_json(r.a_bound);
    row["aSlack"] = to_json(r.a_slack);
    row["absB"] = to_json(r.abs_b);
    row["bBound"] = to_json(r.b_bound);
    row["bSlack"] = to_json(r.b_slack);
    row["verdict"] = to_string(r.verdict);
    rows.push_back(std::move(row));
  }
  Json j;
  j["mapName"] = report.map_name;
  j["conjecture"] = to_string(report.tag);
  j["label"] = report.parametric ? "parametric" : "catalog";
  j["boundParameter"] =
      report.bound_parameter ? to_json(*report.bound_parameter) : Json(nullptr);
  j["allPass"] = report.all_pass();
  j["rows"] = std::move(rows);
  return j;
}

int run_verify(const VerifyOptions& o, unsigned threads, std::ostream& out) {
  const auto spec = resolve_map(o.map, o.param);
  const Mode mode = parse_mode(o.mode);
  const auto tag = parse_conjecture(o.conjecture);
  if (!tag) {
    throw UsageError("unknown conjecture '" + o.conjecture +
                     "' (expected css0, muir, liu-ponnusamy, sh-strict, improved)");
  }
  if (o.nmax < 2 || o.nmax > kMaxCoeffs) throw UsageError("--nmax must lie in [2, 10000]");
  std::optional<Rational> bound_a;
  if (!o.bound_a.empty()) bound_a = parse_rational(o.bound_a);

  bool pass = true;
  Json payload;
  payload["param"] = param_json(spec);
  payload["nmax"] = o.nmax;
  if (mode == Mode::exact) {
    const auto report = check_bounds(spec, *tag, o.nmax, bound_a);
    pass = report.all_pass();
    payload["report"] = report_json(report);
  } else {
    const auto report = check_bounds_float(spec, *tag, o.nmax, bound_a);
    pass = report.all_pass();
    payload["report"] = report_json(report);
  }

  if (o.scan_jacobian) {
    const auto radii = default_scan_radii();
    const auto scan = jacobian_scan(spec, radii, kDefaultScanAngles, threads);
    Json s;
    s["radii"] = radii.size();
    s["angles"] = kDefaultScanAngles;
    s["minJacobian"] = scan.min_jacobian;
    s["argminJacobian"] = to_json(scan.argmin_jacobian);
    s["maxDilatation"] = scan.max_dilatation;
    s["argmaxDilatation"] = to_json(scan.argmax_dilatation);
    const bool lewy = scan.min_jacobian > 0.0 && scan.max_dilatation < 1.0;
    s["verdict"] = lewy ? "pass" : "fail";
    pass = pass && lewy;
    payload["jacobianScan"] = std::move(s);
  }
  emit(out, "verify", mode, std::move(payload));
  return pass ? kPass : kVerificationFailed;
}

// ---------------------------------------------------------------- shear

struct ShearOptions {
  std::string target;
  std::string series_file;
  std::string scale = "1";
  std::string mobius;
  std::string phi = "0";
  int nmax = 10;
  std::string mode = "exact";
};

// Whitespace-separated coefficients c_0 c_1 ... c_N; '#' starts a comment.
std::vector<Rational> read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read series file '" + path + "'");
  std::vector<Rational> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      try {
        coeffs.push_back(parse_rational(token));
      } catch (const ParseError& e) {
        throw UsageError("malformed series file '" + path + "': " + e.what());
      }
    }
  }
  if (coeffs.empty()) throw UsageError("series file '" + path + "' has no coefficients");
  return coeffs;
}

Direction parse_direction(const std::string& text) {
  if (text == "0") return Direction::horizontal();
  if (text == "pi/2") return Direction::vertical();
  try {
    std::size_t used = 0;
    const double phi = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return Direction::from_radians(phi);
  } catch (const std::logic_error&) {
    throw UsageError("--phi must be 0, pi/2 or an angle in radians within [0, pi)");
  }
}

template <Scalar T>
Json series_json(const TruncatedSeries<T>& s) {
  Json arr = Json::array();
  for (const auto& c : s.coefficients()) arr.push_back(to_json(c));
  return arr;
}

template <Scalar T>
int shear_in_mode(const ShearOptions& o, Mode mode, std::ostream& out) {
  const Rational scale = parse_rational(o.scale);
  const int n = o.nmax;

  std::vector<Rational> target;
  if (o.target == "koebe" || o.target == "halfplane") {
    const int m = o.target == "koebe" ? 2 : 1;
    const auto tail = binomial_expand<Rational>(m, n - 1);
    target.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) target[k] = tail[k - 1];
  } else if (o.target == "series-file") {
    if (o.series_file.empty()) throw UsageError("--target series-file needs --series-file PATH");
    target = read_series_file(o.series_file);
    if (static_cast<int>(target.size()) > n + 1) target.resize(static_cast<std::size_t>(n) + 1);
  } else {
    throw UsageError("--target must be koebe, halfplane or series-file");
  }
  std::vector<T> scaled;
  scaled.reserve(target.size());
  for (const auto& c : target) scaled.push_back(from_rational<T>(scale * c));
  const TruncatedSeries<T> F(std::move(scaled));
  const int order = F.order();

  const auto comma = o.mobius.find(',');
  if (comma == std::string::npos) throw UsageError("--mobius expects ALPHA,BETA");
  const Rational alpha = parse_rational(o.mobius.substr(0, comma));
  const std::string beta_text = o.mobius.substr(comma + 1);
  int beta = 0;
  if (beta_text == "1" || beta_text == "+1") {
    beta = 1;
  } else if (beta_text == "-1") {
    beta = -1;
  } else if (beta_text != "0") {
    throw UsageError("Mobius beta must be +1, -1 or 0");
  }
  if (boost::multiprecision::abs(alpha) >= 1) throw UsageError("Mobius alpha must satisfy |alpha| < 1");
  // beta = 0 is the constant dilatation omega = alpha.
  const auto omega = beta == 0
                         ? TruncatedSeries<T>::constant(from_rational<T>(alpha), order)
                         : mobius_series<T>(MobiusDilatation(alpha, beta), order);

  const Direction direction = parse_direction(o.phi);
  if (mode == Mode::exact && !direction.is_exact()) {
    throw UsageError("exact mode supports --phi 0 or pi/2 only; use --mode float");
  }

  const auto result = shear(ShearProblem<T>{F, omega, direction});
  Json payload;
  payload["target"] = o.target;
  payload["scale"] = to_json(scale);
  payload["mobius"] = {{"alpha", to_json(alpha)}, {"beta", beta}};
  payload["phi"] = o.phi;
  payload["nmax"] = result.h.order();
  payload["h"] = series_json(result.h);
  payload["g"] = series_json(result.g);
  payload["residual"] = to_json(result.residual);
  emit(out, "shear", mode, std::move(payload));
  return kPass;
}

int run_shear(const ShearOptions& o, std::ostream& out) {
  if (o.nmax < 1 || o.nmax > kMaxCoeffs) throw UsageError("--nmax must lie in [1, 10000]");
  const Mode mode = parse_mode(o.mode);
  if (mode == Mode::exact) return shear_in_mode<Rational>(o, mode, out);
  return shear_in_mode<Complex>(o, mode, out);
}

// ---------------------------------------------------------------- grid

struct GridOptions {
  std::string map;
  std::string param;
  int radii = 24;
  int angles = 360;
  double rmax = kMaxEvalRadius;
  std::string out_path;
  std::string mode = "float";
};

int run_grid(const GridOptions& o, unsigned threads, std::ostream& out) {
  const auto spec = resolve_map(o.map, o.param);
  if (parse_mode(o.mode) != Mode::floating) throw UsageError("grid supports --mode float only");
  if (o.radii < 1 || o.angles < 1) throw UsageError("--radii and --angles must be at least 1");
  if (!(o.rmax > 0.0 && o.rmax <= kMaxEvalRadius)) {
    throw UsageError("--rmax must lie in (0, 0.999]");
  }

  // One ring at rmax, or R rings evenly spaced from the origin to rmax.
  std::vector<double> radii(static_cast<std::size_t>(o.radii));
  for (int i = 0; i < o.radii; ++i) {
    radii[i] = o.radii == 1 ? o.rmax : o.rmax * i / (o.radii - 1);
  }
  const auto points = polar_grid(radii, o.angles);
  std::vector<GridSample> samples(points.size());
  parallel_chunks(points.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) samples[i] = eval_map(spec, points[i]);
  });

  std::ostringstream csv;
  csv << "x,y,u,v,jacobian\n";
  for (const auto& s : samples) {
    csv << decimal(s.z.real()) << ',' << decimal(s.z.imag()) << ',' << decimal(s.f.real())
        << ',' << decimal(s.f.imag()) << ',' << decimal(s.jacobian) << '\n';
  }

  if (o.out_path.empty()) {
    out << csv.str();
    return kPass;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + o.out_path + "' for writing");
  file << csv.str();
  file.flush();
  if (!file) throw IoError("failed writing '" + o.out_path + "'");

  Json payload;
  payload["map"] = to_string(spec.name());
  payload["param"] = param_json(spec);
  payload["out"] = o.out_path;
  payload["rows"] = samples.size();
  emit(out, "grid", Mode::floating, std::move(payload));
  return kPass;
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
  bool sharpness = false;
  int n = 0;
  int a_steps = 0;
  std::string format = "json";
  std::string mode = "exact";
};

int run_scan(const ScanOptions& o, std::ostream& out) {
  if (!o.sharpness) throw UsageError("scan needs --sharpness");
  if (o.n < 2 || o.n > kMaxCoeffs) throw UsageError("--n must lie in [2, 10000]");
  if (o.a_steps < 2 || o.a_steps > kMaxCoeffs) throw UsageError("--a-steps must lie in [2, 10000]");
  const Mode mode = parse_mode(o.mode);
  if (o.format != "json" && o.format != "csv") throw UsageError("--format must be 'json' or 'csv'");

  struct Row {
    Rational a, coef, bound, gap;
  };
  std::vector<Row> rows;
  const Rational m = o.n;
  const Rational bound = (2 * m * m + 1) / 3;
  for (int j = 1; j <= o.a_steps; ++j) {
    const Rational a = Rational(-1) + Rational(2 * j, o.a_steps + 1);
    const auto spec = catalog(MapName::ka, a);
    Rational gap = sharpness_gap(o.n, a);  // throws if the closed form disagrees
    rows.push_back({a, boost::multiprecision::abs(spec.a_coef(o.n)), bound, std::move(gap)});
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].gap < rows[i - 1].gap)) {
      throw std::logic_error("sharpness gap is not decreasing in a");
    }
  }

  const auto cell = [mode](const Rational& q) {
    return mode == Mode::exact ? csv_cell(q) : csv_cell(to_double(q));
  };
  const auto value = [mode](const Rational& q) {
    return mode == Mode::exact ? to_json(q) : Json(to_double(q));
  };

  if (o.format == "csv") {
    out << "a,abs_a_n,bound,gap\n";
    for (const auto& r : rows) {
      out << cell(r.a) << ',' << cell(r.coef) << ',' << cell(r.bound) << ',' << cell(r.gap)
          << '\n';
    }
    return kPass;
  }
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(
        {{"a", value(r.a)}, {"absA", value(r.coef)}, {"bound", value(r.bound)}, {"gap", value(r.gap)}});
  }
  Json payload;
  payload["n"] = o.n;
  payload["aSteps"] = o.a_steps;
  payload["gapFormula"] = "(1-a)(2n-1)(n-1)/6";
  payload["rows"] = std::move(arr);
  emit(out, "scan", mode, std::move(payload));
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shear construction and coefficient bounds for harmonic univalent maps",
               "univalent"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", UNIVALENT_VERSION);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for grid scans")
      ->check(CLI::Range(1u, 256u));

  CoeffsOptions coeffs;
  auto* c = app.add_subcommand("coeffs", "Signed Taylor coefficients a_n, b_n of a catalog map");
  c->add_option("--map", coeffs.map, "k0, s0, ka, sa, kc or sc")->required();
  c->add_option("--param", coeffs.param, "a for ka/sa, c for kc/sc (e.g. 1/3 or 0.25)");
  c->add_option("--nmax", coeffs.nmax, "Largest n")->capture_default_str();
  c->add_option("--format", coeffs.format, "json or csv")->capture_default_str();
  c->add_option("--mode", coeffs.mode, "exact or float")->capture_default_str();

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check a conjectured coefficient bound on a catalog map");
  v->add_option("--map", verify.map)->required();
  v->add_option("--param", verify.param);
  v->add_option("--conjecture", verify.conjecture,
                "css0, muir, liu-ponnusamy, sh-strict or improved")
      ->required();
  v->add_option("--bound-a", verify.bound_a, "Explicit a for the improved bound (parametric)");
  v->add_option("--nmax", verify.nmax)->capture_default_str();
  v->add_flag("--scan-jacobian", verify.scan_jacobian, "Also scan J_f and |omega| on the polar grid");
  v->add_option("--mode", verify.mode)->capture_default_str();

  ShearOptions shear_opts;
  auto* s = app.add_subcommand("shear", "Shear a conformal target with a Mobius dilatation");
  s->add_option("--target", shear_opts.target, "koebe, halfplane or series-file")->required();
  s->add_option("--series-file", shear_opts.series_file,
                "Coefficients c_0 c_1 ... (whitespace separated, # comments)");
  s->add_option("--scale", shear_opts.scale, "Rational multiplier for the target")
      ->capture_default_str();
  s->add_option("--mobius", shear_opts.mobius, "ALPHA,BETA with BETA in {+1,-1,0}")->required();
  s->add_option("--phi", shear_opts.phi, "0, pi/2, or radians (float mode)")->capture_default_str();
  s->add_option("--nmax", shear_opts.nmax)->capture_default_str();
  s->add_option("--mode", shear_opts.mode)->capture_default_str();

  GridOptions grid;
  auto* g = app.add_subcommand("grid", "Sample f = h + conj(g) and J_f on a polar grid (CSV)");
  g->add_option("--map", grid.map)->required();
  g->add_option("--param", grid.param);
  g->add_option("--radii", grid.radii, "Number of rings")->capture_default_str();
  g->add_option("--angles", grid.angles, "Samples per ring")->capture_default_str();
  g->add_option("--rmax", grid.rmax, "Outermost ring radius")->capture_default_str();
  g->add_option("--out", grid.out_path, "CSV destination (stdout if omitted)");
  g->add_option("--mode", grid.mode)->capture_default_str();

  ScanOptions scan;
  auto* sc = app.add_subcommand("scan", "Sharpness of the (2n^2+1)/3 bound along k_a");
  sc->add_flag("--sharpness", scan.sharpness)->required();
  sc->add_option("--n", scan.n)->required();
  sc->add_option("--a-steps", scan.a_steps, "Interior grid points in (-1, 1)")->required();
  sc->add_option("--format", scan.format)->capture_default_str();
  sc->add_option("--mode", scan.mode)->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << UNIVALENT_VERSION << '\n';
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*c) return run_coeffs(coeffs, out);
    if (*v) return run_verify(verify, threads, out);
    if (*s) return run_shear(shear_opts, out);
    if (*g) return run_grid(grid, threads, out);
    if (*sc) return run_scan(scan, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    // Library contract violations (bad parameters, incompatible tags, ...)
    // all come from the command line.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace univalent::cli
