#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "schmidtcv/gaussian_model.hpp"
#include "schmidtcv/log_base.hpp"

namespace schmidtcv {

/// Uniform rectangular grid of n1 x n2 cells; samples are taken at cell midpoints.
struct GridSpec {
  std::size_t n1 = 2;
  std::size_t n2 = 2;
  double lo1 = 0.0;
  double hi1 = 1.0;
  double lo2 = 0.0;
  double hi2 = 1.0;

  /// Throws std::invalid_argument unless n >= 2 and hi > lo on both axes.
  void validate() const;

  double step1() const { return (hi1 - lo1) / static_cast<double>(n1); }
  double step2() const { return (hi2 - lo2) / static_cast<double>(n2); }
  double midpoint1(std::size_t j) const { return lo1 + (static_cast<double>(j) + 0.5) * step1(); }
  double midpoint2(std::size_t j) const { return lo2 + (static_cast<double>(j) + 0.5) * step2(); }
  std::vector<double> midpoints1() const;
  std::vector<double> midpoints2() const;

  GridSpec transposed() const { return {n2, n1, lo2, hi2, lo1, hi1}; }
};

/// Square grid covering m_i +- span * sigma_i with n cells per axis.
GridSpec build_grid(const GaussianParams& params, std::size_t n, double span);

/// Amplitude matrix of a bipartite state sampled on a grid. Rows follow
/// axis 1, columns axis 2. After normalization the squared entries sum to 1.
struct DiscretizedState {
  GridSpec grid;
  Eigen::MatrixXd amplitudes;
  bool norm_applied = false;
  /// Frobenius norm of the area-scaled samples before the final rescale.
  double raw_norm = 0.0;

  DiscretizedState transposed() const;
};

using AmplitudeFunction = std::function<double(double, double)>;

/// Samples f at midpoints, multiplies by sqrt(cell area) and rescales to
/// unit Frobenius norm. Throws std::invalid_argument for non-finite samples
/// and NormalizationError when every sample is zero.
DiscretizedState sample_state(const AmplitudeFunction& f, const GridSpec& grid);

/// Same normalization as sample_state, for samples that were already taken.
DiscretizedState normalize_samples(const GridSpec& grid, Eigen::MatrixXd samples);

/// Squared amplitudes: the discrete joint distribution of the two axes.
Eigen::MatrixXd joint_probability(const DiscretizedState& state);

/// Row sums (axis 1) and column sums (axis 2) of a joint distribution.
/// Throws std::invalid_argument on negative or non-finite entries, or when
/// the total deviates from 1 by more than 1e-12.
std::pair<Eigen::VectorXd, Eigen::VectorXd> marginals(const Eigen::MatrixXd& p_joint);

/// sum p log(p / (p1 p2)) over cells with p > 0. Throws std::invalid_argument
/// if some cell has p > 0 while its marginal product vanishes.
double shannon_mi_numeric(const Eigen::MatrixXd& p_joint, LogBase base);

}  // namespace schmidtcv
