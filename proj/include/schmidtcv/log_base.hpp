#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schmidtcv {

/// Logarithm base used for entropies and information measures.
enum class LogBase { two, e };

/// Converts a value measured in nats to the requested base.
inline double from_nats(double nats, LogBase base) {
  return base == LogBase::two ? nats / std::numbers::ln2 : nats;
}

inline LogBase parse_log_base(std::string_view text) {
  if (text == "2") return LogBase::two;
  if (text == "e") return LogBase::e;
  throw std::invalid_argument("log base must be '2' or 'e', got '" + std::string(text) + "'");
}

inline const char* to_string(LogBase base) { return base == LogBase::two ? "2" : "e"; }

}  // namespace schmidtcv
