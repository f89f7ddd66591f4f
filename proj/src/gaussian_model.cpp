#include "schmidtcv/gaussian_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace schmidtcv {

namespace {

void require_schmidt_number(double schmidt_number) {
  if (!(schmidt_number >= 1.0) || !std::isfinite(schmidt_number)) {
    throw std::domain_error("Schmidt number must be finite and >= 1, got " +
                            std::to_string(schmidt_number));
  }
}

}  // namespace

void GaussianParams::validate() const {
  if (!std::isfinite(m1) || !std::isfinite(m2)) {
    throw std::invalid_argument("means must be finite");
  }
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0) || !std::isfinite(sigma1) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("standard deviations must be positive and finite");
  }
  if (!(std::fabs(rho) < 1.0)) {
    throw std::invalid_argument("correlation coefficient must satisfy |rho| < 1, got " +
                                std::to_string(rho));
  }
}

double GeometricSpectrum::weight(std::size_t k) const {
  if (k == 0) return lambda0;
  return lambda0 * std::pow(ratio, static_cast<double>(k));
}

GeometricSpectrum geometric_spectrum(double schmidt_number) {
  require_schmidt_number(schmidt_number);
  GeometricSpectrum s;
  s.schmidt_number = schmidt_number;
  s.lambda0 = 2.0 / (schmidt_number + 1.0);
  s.ratio = schmidt_number == 1.0 ? 0.0 : (schmidt_number - 1.0) / (schmidt_number + 1.0);
  return s;
}

double density(const GaussianParams& params, double x1, double x2) {
  params.validate();
  const double u = (x1 - params.m1) / params.sigma1;
  const double v = (x2 - params.m2) / params.sigma2;
  const double one_minus_rho2 = (1.0 - params.rho) * (1.0 + params.rho);
  const double quadratic = (u * u - 2.0 * params.rho * u * v + v * v) / one_minus_rho2;
  const double norm =
      2.0 * std::numbers::pi * params.sigma1 * params.sigma2 * std::sqrt(one_minus_rho2);
  return std::exp(-0.5 * quadratic) / norm;
}

double wavefunction(const GaussianParams& params, double x1, double x2) {
  return std::sqrt(density(params, x1, x2));
}

double schmidt_number_from_rho(double rho) {
  if (!(std::fabs(rho) < 1.0)) {
    throw std::domain_error("Schmidt number is infinite for |rho| >= 1");
  }
  return 1.0 / std::sqrt((1.0 - rho) * (1.0 + rho));
}

double rho_squared_from_K(double schmidt_number) {
  require_schmidt_number(schmidt_number);
  return 1.0 - 1.0 / (schmidt_number * schmidt_number);
}

std::vector<double> analytic_weights(double schmidt_number, std::size_t count) {
  if (count == 0) throw std::invalid_argument("weight count must be positive");
  const GeometricSpectrum spectrum = geometric_spectrum(schmidt_number);
  std::vector<double> weights(count);
  for (std::size_t k = 0; k < count; ++k) weights[k] = spectrum.weight(k);
  return weights;
}

std::size_t geometric_truncation_length(double schmidt_number) {
  const GeometricSpectrum spectrum = geometric_spectrum(schmidt_number);
  std::size_t k = 0;
  while (k < kMaxModeTerms && spectrum.weight(k) >= 1e-15) ++k;
  return std::max<std::size_t>(k, 1);
}

double hermite_polynomial(unsigned k, double u) {
  double previous = 1.0;
  if (k == 0) return previous;
  double current = 2.0 * u;
  for (unsigned j = 1; j < k; ++j) {
    const double next = 2.0 * u * current - 2.0 * j * previous;
    previous = current;
    current = next;
  }
  return current;
}

std::vector<double> hermite_functions(unsigned k_max, double u) {
  // h_{j+1} = sqrt(2/(j+1)) u h_j - sqrt(j/(j+1)) h_{j-1}, which is the
  // Hermite recurrence with the normalization and Gaussian factor folded in.
  std::vector<double> h(k_max + 1);
  h[0] = std::exp(-0.5 * u * u) / std::sqrt(std::sqrt(std::numbers::pi));
  if (k_max >= 1) h[1] = std::sqrt(2.0) * u * h[0];
  for (unsigned j = 1; j < k_max; ++j) {
    h[j + 1] = std::sqrt(2.0 / (j + 1.0)) * u * h[j] - std::sqrt(j / (j + 1.0)) * h[j - 1];
  }
  return h;
}

double mode_normalization(unsigned k, double sigma, double schmidt_number) {
  require_schmidt_number(schmidt_number);
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  // [sigma sqrt(2/K) 2^k k! sqrt(pi)]^(-1/2), assembled in log space.
  const double log_c = -0.5 * (std::log(sigma) + 0.5 * std::log(2.0 / schmidt_number) +
                               k * std::numbers::ln2 + std::lgamma(k + 1.0) +
                               0.5 * std::log(std::numbers::pi));
  return std::exp(log_c);
}

double analytic_mode(unsigned k, double m, double sigma, double schmidt_number, double x) {
  require_schmidt_number(schmidt_number);
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  const double scale = std::sqrt(schmidt_number / 2.0) / sigma;
  return std::sqrt(scale) * hermite_functions(k, scale * (x - m))[k];
}

double closed_form_entropy(double schmidt_number, LogBase base) {
  require_schmidt_number(schmidt_number);
  if (schmidt_number == 1.0) return 0.0;
  const double km1 = schmidt_number - 1.0;
  const double nats =
      std::log((schmidt_number + 1.0) / 2.0) + 0.5 * km1 * std::log1p(2.0 / km1);
  return from_nats(nats, base);
}

double shannon_mi_gaussian(double rho, LogBase base) {
  if (!(std::fabs(rho) < 1.0)) {
    throw std::domain_error("mutual information is infinite for |rho| >= 1");
  }
  return from_nats(-0.5 * std::log1p(-rho * rho), base);
}

double analytic_synthesis(const GaussianParams& params, double x1, double x2,
                          double amplitude_cutoff) {
  params.validate();
  const double schmidt_number = schmidt_number_from_rho(params.rho);
  const GeometricSpectrum spectrum = geometric_spectrum(schmidt_number);

  std::size_t terms = 0;
  while (terms < kMaxModeTerms && std::sqrt(spectrum.weight(terms)) >= amplitude_cutoff) ++terms;
  if (terms == 0) return 0.0;

  const double scale = std::sqrt(schmidt_number / 2.0);
  const double a1 = scale / params.sigma1;
  const double a2 = scale / params.sigma2;
  const auto h1 = hermite_functions(static_cast<unsigned>(terms - 1), a1 * (x1 - params.m1));
  const auto h2 = hermite_functions(static_cast<unsigned>(terms - 1), a2 * (x2 - params.m2));
  const double prefactor = std::sqrt(a1 * a2);

  double sum = 0.0;
  for (std::size_t k = 0; k < terms; ++k) {
    const double sign = (params.rho < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
    sum += sign * std::sqrt(spectrum.weight(k)) * h1[k] * h2[k];
  }
  return prefactor * sum;
}

}  // namespace schmidtcv
