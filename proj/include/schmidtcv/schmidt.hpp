#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "schmidtcv/discretize.hpp"
#include "schmidtcv/log_base.hpp"

namespace schmidtcv {

/// Schmidt decomposition of a discretized state:
///   amplitudes = sum_k sqrt(weights[k]) * modes1.col(k) * modes2.col(k)^T
///
/// Weights are non-increasing and sum to 1. Mode columns are orthonormal
/// vectors; divide by sqrt(step) to compare with continuous mode functions.
/// Each pair is signed so that the largest-magnitude entry of the modes1
/// column is positive (the first such entry when several tie).
struct SchmidtSpectrum {
  std::vector<double> weights;
  Eigen::MatrixXd modes1;
  Eigen::MatrixXd modes2;
  GridSpec grid;

  std::size_t size() const { return weights.size(); }
};

/// Full SVD of the amplitude matrix; keeps all min(n1, n2) modes.
/// Throws std::invalid_argument for an unnormalized state and
/// NumericalError if the SVD does not converge.
SchmidtSpectrum decompose(const DiscretizedState& state);

/// Validates a probability vector: entries in [-1e-14, 0) are clamped to 0,
/// anything more negative is rejected, and the sum must be 1 within 1e-10.
std::vector<double> checked_weights(std::span<const double> weights);

/// K = 1 / sum lambda_k^2.
double schmidt_number(std::span<const double> weights);

/// -sum lambda_k log lambda_k, with 0 log 0 = 0.
double entanglement_entropy(std::span<const double> weights, LogBase base);

/// Truncated synthesis from the leading `rank` Schmidt pairs. The result is
/// not renormalized (norm_applied is false).
DiscretizedState reconstruct(const SchmidtSpectrum& spectrum, std::size_t rank);

/// Frobenius norm of the amplitude difference.
double residual_norm(const DiscretizedState& a, const DiscretizedState& b);

}  // namespace schmidtcv
