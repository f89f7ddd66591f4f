#pragma once

#include <charconv>
#include <string>

namespace schmidtcv {

/// %.17g-style text; parses back to the same double.
inline std::string format_number(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

}  // namespace schmidtcv
