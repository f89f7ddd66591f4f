#include "schmidtcv/discretize.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "schmidtcv/compensated_sum.hpp"
#include "schmidtcv/errors.hpp"

namespace schmidtcv {

void GridSpec::validate() const {
  if (n1 < 2 || n2 < 2) {
    throw std::invalid_argument("grid needs at least 2 points per axis");
  }
  if (!std::isfinite(lo1) || !std::isfinite(hi1) || !std::isfinite(lo2) || !std::isfinite(hi2)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (!(hi1 > lo1) || !(hi2 > lo2)) {
    throw std::invalid_argument("grid bounds must satisfy hi > lo on each axis");
  }
  if (!(step1() > 0.0) || !(step2() > 0.0)) {
    throw std::invalid_argument("grid cell widths must be positive");
  }
}

std::vector<double> GridSpec::midpoints1() const {
  std::vector<double> x(n1);
  for (std::size_t j = 0; j < n1; ++j) x[j] = midpoint1(j);
  return x;
}

std::vector<double> GridSpec::midpoints2() const {
  std::vector<double> x(n2);
  for (std::size_t j = 0; j < n2; ++j) x[j] = midpoint2(j);
  return x;
}

GridSpec build_grid(const GaussianParams& params, std::size_t n, double span) {
  params.validate();
  if (!(span > 0.0) || !std::isfinite(span)) {
    throw std::invalid_argument("span must be positive and finite");
  }
  GridSpec grid{n,
                n,
                params.m1 - span * params.sigma1,
                params.m1 + span * params.sigma1,
                params.m2 - span * params.sigma2,
                params.m2 + span * params.sigma2};
  grid.validate();
  return grid;
}

DiscretizedState DiscretizedState::transposed() const {
  return {grid.transposed(), amplitudes.transpose(), norm_applied, raw_norm};
}

DiscretizedState normalize_samples(const GridSpec& grid, Eigen::MatrixXd samples) {
  grid.validate();
  if (static_cast<std::size_t>(samples.rows()) != grid.n1 ||
      static_cast<std::size_t>(samples.cols()) != grid.n2) {
    throw std::invalid_argument("sample matrix shape does not match the grid");
  }
  samples *= std::sqrt(grid.step1() * grid.step2());

  // Row-major, fixed order: the norm is reproducible bit for bit.
  CompensatedSum squares;
  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    for (Eigen::Index j = 0; j < samples.cols(); ++j) {
      const double a = samples(i, j);
      if (!std::isfinite(a)) {
        throw std::invalid_argument("non-finite amplitude sample at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
      squares += a * a;
    }
  }
  const double norm = std::sqrt(squares.value());
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw NormalizationError("cannot normalize: amplitude samples have zero norm");
  }
  samples /= norm;
  return {grid, std::move(samples), true, norm};
}

DiscretizedState sample_state(const AmplitudeFunction& f, const GridSpec& grid) {
  grid.validate();
  const auto x1 = grid.midpoints1();
  const auto x2 = grid.midpoints2();
  Eigen::MatrixXd samples(grid.n1, grid.n2);
  for (std::size_t i = 0; i < grid.n1; ++i) {
    for (std::size_t j = 0; j < grid.n2; ++j) samples(i, j) = f(x1[i], x2[j]);
  }
  return normalize_samples(grid, std::move(samples));
}

Eigen::MatrixXd joint_probability(const DiscretizedState& state) {
  return state.amplitudes.array().square().matrix();
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> marginals(const Eigen::MatrixXd& p_joint) {
  if (p_joint.size() == 0) throw std::invalid_argument("joint distribution is empty");
  const Eigen::Index rows = p_joint.rows();
  const Eigen::Index cols = p_joint.cols();
  std::vector<CompensatedSum> row_sums(rows), col_sums(cols);
  CompensatedSum total;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double p = p_joint(i, j);
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("joint distribution has a negative or non-finite entry at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      row_sums[i] += p;
      col_sums[j] += p;
      total += p;
    }
  }
  if (std::fabs(total.value() - 1.0) > 1e-12) {
    throw std::invalid_argument("joint distribution must sum to 1, got " +
                                std::to_string(total.value()));
  }
  Eigen::VectorXd p1(rows), p2(cols);
  for (Eigen::Index i = 0; i < rows; ++i) p1[i] = row_sums[i].value();
  for (Eigen::Index j = 0; j < cols; ++j) p2[j] = col_sums[j].value();
  return {std::move(p1), std::move(p2)};
}

double shannon_mi_numeric(const Eigen::MatrixXd& p_joint, LogBase base) {
  const auto [p1, p2] = marginals(p_joint);
  CompensatedSum mi;
  for (Eigen::Index i = 0; i < p_joint.rows(); ++i) {
    for (Eigen::Index j = 0; j < p_joint.cols(); ++j) {
      const double p = p_joint(i, j);
      if (p == 0.0) continue;
      if (p1[i] == 0.0 || p2[j] == 0.0) {
        throw std::invalid_argument("inconsistent joint: positive cell with zero marginal");
      }
      mi += p * (std::log(p) - std::log(p1[i]) - std::log(p2[j]));
    }
  }
  // Gibbs' inequality; a negative total can only be rounding.
  return from_nats(std::max(0.0, mi.value()), base);
}

}  // namespace schmidtcv
