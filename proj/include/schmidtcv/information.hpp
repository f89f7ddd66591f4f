#pragma once

// Coincidence probability and Schmidt information of n perfectly
// correlated symbol pairs drawn from a spectrum with Schmidt number K.

#include <cstddef>
#include <optional>

#include "schmidtcv/log_base.hpp"

namespace schmidtcv {

/// Probability that two independent n-symbol strings coincide: K^-n.
double coincidence_probability(double schmidt_number, std::size_t n);

/// n log K in the requested base.
double schmidt_information(double schmidt_number, std::size_t n, LogBase base);

/// W = K^n. The value is kept only in log space once n ln K exceeds 700.
struct EffectiveMicrostates {
  double log_value = 0.0;
  std::optional<double> value;

  bool in_log_space() const { return !value.has_value(); }
};

EffectiveMicrostates effective_microstates(double schmidt_number, std::size_t n);

struct InfoReport {
  double schmidt_number = 1.0;
  std::size_t n_symbols = 1;
  double info_bits = 0.0;
  double info_nats = 0.0;
  EffectiveMicrostates microstates;
  double p_coincidence = 1.0;
};

InfoReport make_info_report(double schmidt_number, std::size_t n);

}  // namespace schmidtcv
