#include "qconc/app/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace qconc::app {

std::string format_sig9(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // fold -0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 9);
  return std::string(buf.data(), res.ptr);
}

}  // namespace qconc::app
