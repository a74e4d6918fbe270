#include "metrikos/format.hpp"

#include <array>
#include <charconv>

namespace metrikos {

std::string format_number(double value, int digits) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, digits);
  if (ec != std::errc{}) return "nan";
  std::string out(buf.data(), end);
  if (out == "-0") out = "0";
  return out;
}

}  // namespace metrikos
