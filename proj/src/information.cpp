#include "schmidtcv/information.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schmidtcv {

namespace {

constexpr double kMaxLinearLogW = 700.0;

void require_arguments(double schmidt_number, std::size_t n) {
  if (!(schmidt_number >= 1.0) || !std::isfinite(schmidt_number)) {
    throw std::domain_error("Schmidt number must be finite and >= 1, got " +
                            std::to_string(schmidt_number));
  }
  if (n == 0) throw std::invalid_argument("number of symbols must be positive");
}

}  // namespace

double coincidence_probability(double schmidt_number, std::size_t n) {
  require_arguments(schmidt_number, n);
  return std::pow(schmidt_number, -static_cast<double>(n));
}

double schmidt_information(double schmidt_number, std::size_t n, LogBase base) {
  require_arguments(schmidt_number, n);
  const double per_symbol = base == LogBase::two ? std::log2(schmidt_number) : std::log(schmidt_number);
  return static_cast<double>(n) * per_symbol;
}

EffectiveMicrostates effective_microstates(double schmidt_number, std::size_t n) {
  EffectiveMicrostates w;
  w.log_value = schmidt_information(schmidt_number, n, LogBase::e);
  if (w.log_value <= kMaxLinearLogW) w.value = std::pow(schmidt_number, static_cast<double>(n));
  return w;
}

InfoReport make_info_report(double schmidt_number, std::size_t n) {
  InfoReport report;
  report.schmidt_number = schmidt_number;
  report.n_symbols = n;
  report.info_nats = schmidt_information(schmidt_number, n, LogBase::e);
  report.info_bits = from_nats(report.info_nats, LogBase::two);
  report.microstates = effective_microstates(schmidt_number, n);
  report.p_coincidence = coincidence_probability(schmidt_number, n);
  return report;
}

}  // namespace schmidtcv
