#pragma once

// Thermal reading of the geometric Schmidt spectrum: the ratio
// q = (K-1)/(K+1) is the Boltzmann factor exp(-beta) of an oscillator,
// with beta = hbar omega / theta. Only the ratio beta is represented.

#include <cstddef>
#include <vector>

#include "schmidtcv/log_base.hpp"

namespace schmidtcv {

struct ThermoPoint {
  double beta;

  /// Throws std::domain_error unless beta > 0.
  explicit ThermoPoint(double beta);
};

/// beta = ln((K+1)/(K-1)). Throws std::domain_error for K <= 1.
double beta_from_K(double schmidt_number);

/// K = coth(beta/2).
double K_from_beta(double beta);

/// rho^2 = 1 / cosh^2(beta/2).
double rho_squared_from_beta(double beta);

/// Entropy of a thermal oscillator, -log(1 - e^-beta) + beta / (e^beta - 1).
double oscillator_entropy(double beta, LogBase base);

struct ThermoRow {
  double beta;
  double schmidt_number;
  double rho_squared;
  double entropy;
};

/// `points` values of beta spaced evenly in log between beta_min and beta_max.
std::vector<ThermoRow> thermo_sweep(double beta_min, double beta_max, std::size_t points,
                                    LogBase base);

}  // namespace schmidtcv
