#pragma once

// Monte Carlo model of two observers reading symbol strings. Each symbol
// k is drawn with probability lambda_k; two independent sources coincide
// on an n-symbol string with probability K^-n.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace schmidtcv {

/// 64-bit Mersenne Twister with a fixed 53-bit mapping to [0, 1), so
/// streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Inverse-CDF sampling over cumulative weights.
class CategoricalSampler {
 public:
  /// Throws std::invalid_argument unless weights form a probability vector.
  explicit CategoricalSampler(std::span<const double> weights);

  std::size_t operator()(Rng& rng) const;
  std::size_t size() const { return cumulative_.size(); }

 private:
  std::vector<double> cumulative_;
};

/// Geometric spectrum of Schmidt number K, cut once the cumulative weight
/// reaches 1 - tail; the remainder is added to the last symbol.
std::vector<double> truncated_geometric_weights(double schmidt_number, double tail = 1e-12);

std::vector<std::size_t> sample_stream(std::span<const double> weights, std::size_t n,
                                       std::uint64_t seed);

struct CoincidenceReport {
  std::size_t n_symbols = 0;
  std::size_t trials = 0;
  std::size_t hits = 0;            ///< trials where all n positions matched
  std::size_t position_hits = 0;   ///< matching positions over all trials
  double p_hat = 0.0;
  double p_theory = 0.0;           ///< K^-n
  double std_err = 0.0;            ///< sqrt(p_hat (1 - p_hat) / trials)
  std::uint64_t seed = 0;
};

CoincidenceReport run_coincidence_experiment(std::span<const double> weights, std::size_t n,
                                             std::size_t trials, std::uint64_t seed);

}  // namespace schmidtcv
