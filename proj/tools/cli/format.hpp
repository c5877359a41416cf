#pragma once

#include <string>

#include <json.hpp>

#include "univalent/scalar.hpp"

namespace univalent::cli {

using Json = nlohmann::ordered_json;

/// Plain decimal (never exponent notation), shortest digits that round-trip.
std::string decimal(double x);

/// Exact scalars serialize as "num/den" strings, floating ones as numbers
/// (real) or [re, im] pairs.
inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(double x) { return x; }
inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

/// CSV cell for a scalar.
inline std::string csv_cell(const Rational& q) { return to_string(q); }
inline std::string csv_cell(double x) { return decimal(x); }

}  // namespace univalent::cli
