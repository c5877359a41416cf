#include "format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace univalent::cli {

std::string decimal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  std::array<char, 400> buf;
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                       std::chars_format::fixed);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

}  // namespace univalent::cli
