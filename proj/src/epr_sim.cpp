#include "schmidtcv/epr_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schmidtcv/gaussian_model.hpp"
#include "schmidtcv/information.hpp"
#include "schmidtcv/schmidt.hpp"

namespace schmidtcv {

CategoricalSampler::CategoricalSampler(std::span<const double> weights) {
  const std::vector<double> w = checked_weights(weights);
  cumulative_.resize(w.size());
  double running = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    running += w[k];
    cumulative_[k] = running;
  }
  // Trailing zero-weight symbols must stay unreachable.
  const auto last = std::find_if(w.rbegin(), w.rend(), [](double x) { return x > 0.0; });
  const auto last_index = static_cast<std::size_t>(std::distance(last, w.rend())) - 1;
  for (std::size_t k = last_index; k < cumulative_.size(); ++k) cumulative_[k] = 1.0;
}

std::size_t CategoricalSampler::operator()(Rng& rng) const {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<std::size_t>(std::distance(cumulative_.begin(), it));
}

std::vector<double> truncated_geometric_weights(double schmidt_number, double tail) {
  if (!(tail > 0.0 && tail < 1.0)) throw std::invalid_argument("tail must lie in (0, 1)");
  const GeometricSpectrum spectrum = geometric_spectrum(schmidt_number);
  std::vector<double> weights;
  double cumulative = 0.0;
  do {
    const double w = spectrum.weight(weights.size());
    weights.push_back(w);
    cumulative += w;
  } while (cumulative < 1.0 - tail && spectrum.ratio > 0.0);
  weights.back() += 1.0 - cumulative;
  return weights;
}

std::vector<std::size_t> sample_stream(std::span<const double> weights, std::size_t n,
                                       std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("stream length must be positive");
  const CategoricalSampler sampler(weights);
  Rng rng(seed);
  std::vector<std::size_t> stream(n);
  for (auto& symbol : stream) symbol = sampler(rng);
  return stream;
}

CoincidenceReport run_coincidence_experiment(std::span<const double> weights, std::size_t n,
                                             std::size_t trials, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("stream length must be positive");
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  const CategoricalSampler sampler(weights);
  Rng rng(seed);

  CoincidenceReport report;
  report.n_symbols = n;
  report.trials = trials;
  report.seed = seed;

  std::vector<std::size_t> alice(n), bob(n);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& symbol : alice) symbol = sampler(rng);
    for (auto& symbol : bob) symbol = sampler(rng);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < n; ++i) matches += alice[i] == bob[i] ? 1 : 0;
    report.position_hits += matches;
    if (matches == n) ++report.hits;
  }

  report.p_hat = static_cast<double>(report.hits) / static_cast<double>(trials);
  report.std_err = std::sqrt(report.p_hat * (1.0 - report.p_hat) / static_cast<double>(trials));
  report.p_theory = coincidence_probability(schmidt_number(weights), n);
  return report;
}

}  // namespace schmidtcv
