#include "schmidtcv/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "schmidtcv/compensated_sum.hpp"
#include "schmidtcv/errors.hpp"

namespace schmidtcv {

namespace {

constexpr double kNegativeWeightTolerance = 1e-14;
constexpr double kWeightSumTolerance = 1e-10;
constexpr double kStateNormTolerance = 1e-12;

const char* describe(Eigen::ComputationInfo info) {
  switch (info) {
    case Eigen::Success:
      return "success";
    case Eigen::NumericalIssue:
      return "numerical issue";
    case Eigen::NoConvergence:
      return "no convergence";
    case Eigen::InvalidInput:
      return "invalid input";
  }
  return "unknown";
}

Eigen::Index leading_entry(const Eigen::Ref<const Eigen::VectorXd>& v) {
  const double largest = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::fabs(v[i]) >= (1.0 - 1e-10) * largest) return i;
  }
  return 0;
}

}  // namespace

SchmidtSpectrum decompose(const DiscretizedState& state) {
  if (!state.norm_applied) {
    throw std::invalid_argument("decompose requires a normalized state");
  }
  const Eigen::MatrixXd& a = state.amplitudes;
  if (!a.allFinite()) throw std::invalid_argument("state has non-finite amplitudes");
  const double norm = a.norm();
  if (std::fabs(norm * norm - 1.0) > kStateNormTolerance) {
    throw std::invalid_argument("state is not normalized (squared norm " +
                                std::to_string(norm * norm) + ")");
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("SVD of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " amplitude matrix failed: " + describe(svd.info()) +
                         " (two-sided Jacobi, threshold " + std::to_string(svd.threshold()) + ")");
  }

  SchmidtSpectrum spectrum;
  spectrum.grid = state.grid;
  spectrum.modes1 = svd.matrixU();
  spectrum.modes2 = svd.matrixV();
  const Eigen::VectorXd& s = svd.singularValues();
  spectrum.weights.resize(static_cast<std::size_t>(s.size()));
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    spectrum.weights[static_cast<std::size_t>(k)] = s[k] * s[k];
    if (spectrum.modes1(leading_entry(spectrum.modes1.col(k)), k) < 0.0) {
      spectrum.modes1.col(k) *= -1.0;
      spectrum.modes2.col(k) *= -1.0;
    }
  }
  return spectrum;
}

std::vector<double> checked_weights(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("weight vector is empty");
  std::vector<double> out(weights.begin(), weights.end());
  CompensatedSum total;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!std::isfinite(out[k])) throw std::invalid_argument("weights must be finite");
    if (out[k] < -kNegativeWeightTolerance) {
      throw std::invalid_argument("negative weight " + std::to_string(out[k]) + " at index " +
                                  std::to_string(k));
    }
    if (out[k] < 0.0) out[k] = 0.0;
    total += out[k];
  }
  if (total.value() == 0.0) throw std::invalid_argument("weight vector is zero");
  if (std::fabs(total.value() - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument("weights must sum to 1, got " + std::to_string(total.value()));
  }
  return out;
}

double schmidt_number(std::span<const double> weights) {
  CompensatedSum purity;
  for (const double w : checked_weights(weights)) purity += w * w;
  return 1.0 / purity.value();
}

double entanglement_entropy(std::span<const double> weights, LogBase base) {
  CompensatedSum entropy;
  for (const double w : checked_weights(weights)) {
    if (w > 0.0) entropy += -w * std::log(w);
  }
  return from_nats(std::max(0.0, entropy.value()), base);
}

DiscretizedState reconstruct(const SchmidtSpectrum& spectrum, std::size_t rank) {
  if (rank == 0 || rank > spectrum.size()) {
    throw std::out_of_range("rank " + std::to_string(rank) + " outside [1, " +
                            std::to_string(spectrum.size()) + "]");
  }
  const auto r = static_cast<Eigen::Index>(rank);
  Eigen::VectorXd amplitude(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    amplitude[k] = std::sqrt(spectrum.weights[static_cast<std::size_t>(k)]);
  }
  DiscretizedState out;
  out.grid = spectrum.grid;
  out.amplitudes = spectrum.modes1.leftCols(r) * amplitude.asDiagonal() *
                   spectrum.modes2.leftCols(r).transpose();
  out.norm_applied = false;
  out.raw_norm = out.amplitudes.norm();
  return out;
}

double residual_norm(const DiscretizedState& a, const DiscretizedState& b) {
  if (a.amplitudes.rows() != b.amplitudes.rows() || a.amplitudes.cols() != b.amplitudes.cols()) {
    throw std::invalid_argument("states have different shapes");
  }
  return (a.amplitudes - b.amplitudes).norm();
}

}  // namespace schmidtcv
