#include "schmidtcv/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schmidtcv {

namespace {

void require_beta(double beta) {
  if (!(beta > 0.0) || std::isnan(beta)) {
    throw std::domain_error("beta must be positive, got " + std::to_string(beta));
  }
}

}  // namespace

ThermoPoint::ThermoPoint(double value) : beta(value) { require_beta(value); }

double beta_from_K(double schmidt_number) {
  if (!(schmidt_number > 1.0) || std::isnan(schmidt_number)) {
    throw std::domain_error("beta is infinite for K <= 1");
  }
  if (std::isinf(schmidt_number)) return 0.0;
  return std::log1p(2.0 / (schmidt_number - 1.0));
}

double K_from_beta(double beta) {
  require_beta(beta);
  return 1.0 / std::tanh(0.5 * beta);
}

double rho_squared_from_beta(double beta) {
  require_beta(beta);
  const double c = std::cosh(0.5 * beta);
  return 1.0 / (c * c);
}

double oscillator_entropy(double beta, LogBase base) {
  require_beta(beta);
  // -log(1 - e^-beta), written to stay accurate at both ends of the range.
  const double occupation_term =
      beta > 1.0 ? -std::log1p(-std::exp(-beta)) : -std::log(-std::expm1(-beta));
  const double energy_term = beta / std::expm1(beta);
  return from_nats(occupation_term + energy_term, base);
}

std::vector<ThermoRow> thermo_sweep(double beta_min, double beta_max, std::size_t points,
                                    LogBase base) {
  require_beta(beta_min);
  require_beta(beta_max);
  if (!(beta_max >= beta_min)) throw std::invalid_argument("beta_max must be >= beta_min");
  if (points == 0) throw std::invalid_argument("sweep needs at least one point");
  if (points > 1 && beta_max == beta_min) {
    throw std::invalid_argument("a sweep of several points needs beta_max > beta_min");
  }

  std::vector<ThermoRow> rows;
  rows.reserve(points);
  const double log_min = std::log(beta_min);
  const double log_step = points > 1 ? (std::log(beta_max) - log_min) / (points - 1.0) : 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    double beta = std::exp(log_min + log_step * static_cast<double>(i));
    if (i == 0) beta = beta_min;
    if (i + 1 == points) beta = beta_max;
    rows.push_back({beta, K_from_beta(beta), rho_squared_from_beta(beta),
                    oscillator_entropy(beta, base)});
  }
  return rows;
}

}  // namespace schmidtcv
