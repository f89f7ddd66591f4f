#pragma once

// Closed-form model of a bivariate normal distribution realized as a
// real wavefunction psi = sqrt(p). Its Schmidt decomposition is known
// exactly: Hermite-function modes with geometric weights. Everything here
// is used as the reference against which the numerical pipeline is tested.

#include <cstddef>
#include <vector>

#include "schmidtcv/log_base.hpp"

namespace schmidtcv {

/// Means, standard deviations and Pearson correlation of a bivariate normal.
struct GaussianParams {
  double m1 = 0.0;
  double m2 = 0.0;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  double rho = 0.0;

  /// Throws std::invalid_argument unless both sigmas are positive and |rho| < 1.
  void validate() const;
};

/// Geometric Schmidt spectrum lambda_k = lambda0 * ratio^k of the Gaussian state.
struct GeometricSpectrum {
  double schmidt_number = 1.0;
  double lambda0 = 1.0;
  double ratio = 0.0;

  double weight(std::size_t k) const;
};

/// Spectrum parameters for Schmidt number K >= 1. The ratio is exactly 0 at K = 1.
GeometricSpectrum geometric_spectrum(double schmidt_number);

double density(const GaussianParams& params, double x1, double x2);
double wavefunction(const GaussianParams& params, double x1, double x2);

/// K = 1/sqrt(1 - rho^2). Throws std::domain_error for |rho| >= 1.
double schmidt_number_from_rho(double rho);

/// rho^2 = 1 - 1/K^2. Throws std::domain_error for K < 1.
double rho_squared_from_K(double schmidt_number);

/// First `count` weights of the geometric spectrum.
std::vector<double> analytic_weights(double schmidt_number, std::size_t count);

/// Number of geometric terms kept when an infinite mode sum is truncated:
/// stops at the first weight below 1e-15, and never exceeds 512.
std::size_t geometric_truncation_length(double schmidt_number);

inline constexpr std::size_t kMaxModeTerms = 512;

/// Physicists' Hermite polynomial H_k(u) by the three-term recurrence.
/// Overflows for large k and |u|; use hermite_function for evaluation of modes.
double hermite_polynomial(unsigned k, double u);

/// Orthonormal Hermite functions H_j(u) exp(-u^2/2) / sqrt(2^j j! sqrt(pi))
/// for j = 0..k_max, computed with a scaled recurrence that does not overflow.
std::vector<double> hermite_functions(unsigned k_max, double u);

/// C_k so that C_k H_k(...) exp(...) has unit L2 norm.
double mode_normalization(unsigned k, double sigma, double schmidt_number);

/// Schmidt mode k of the Gaussian state along one axis:
/// C_k H_k((x-m)/sigma * sqrt(K/2)) exp(-K (x-m)^2 / (4 sigma^2)).
double analytic_mode(unsigned k, double m, double sigma, double schmidt_number, double x);

/// Entanglement entropy of the geometric spectrum in closed form; 0 at K = 1.
double closed_form_entropy(double schmidt_number, LogBase base);

/// Mutual information of the bivariate normal, log K.
double shannon_mi_gaussian(double rho, LogBase base);

/// sum_k sqrt(lambda_k) psi_k(x1) psi_k(x2), truncated once sqrt(lambda_k)
/// drops below `amplitude_cutoff` (or after kMaxModeTerms terms). For
/// negative rho the odd terms carry a minus sign.
double analytic_synthesis(const GaussianParams& params, double x1, double x2,
                          double amplitude_cutoff = 1e-12);

}  // namespace schmidtcv
