#include "schmidtcv/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include "schmidtcv/discretize.hpp"
#include "schmidtcv/epr_sim.hpp"
#include "schmidtcv/information.hpp"
#include "schmidtcv/schmidt.hpp"
#include "schmidtcv/state_file.hpp"
#include "schmidtcv/thermo.hpp"

namespace schmidtcv {

namespace {

constexpr std::size_t kDefaultTableRows = 6;
constexpr std::size_t kDefaultModeCount = 4;

Cell integer(std::size_t v) { return static_cast<std::int64_t>(v); }
Cell text(std::string s) { return s; }

DiscretizedState gaussian_state(const GaussianParams& params, std::size_t n, double span) {
  const GridSpec grid = build_grid(params, n, span);
  return sample_state([&params](double x1, double x2) { return wavefunction(params, x1, x2); },
                      grid);
}

// Continuous-normalization mode values: unit vectors divided by sqrt(step).
Table mode_table(const std::string& name, const std::vector<double>& x, double step,
                 const Eigen::MatrixXd& modes, std::size_t count) {
  Table table{name, {"j", "x"}, {}};
  for (std::size_t k = 0; k < count; ++k) table.columns.push_back("mode_" + std::to_string(k));
  const double scale = 1.0 / std::sqrt(step);
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<Cell> row{integer(j), x[j]};
    for (std::size_t k = 0; k < count; ++k) {
      row.emplace_back(scale * modes(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

struct AxisModes {
  Table table;
  double max_abs_diff = 0.0;
};

AxisModes compare_axis(const std::string& name, const std::vector<double>& x, double step,
                       const Eigen::MatrixXd& modes, std::size_t count, double m, double sigma,
                       double schmidt_number) {
  AxisModes out{{name, {"j", "x"}, {}}, 0.0};
  for (std::size_t k = 0; k < count; ++k) {
    out.table.columns.push_back("analytic_" + std::to_string(k));
    out.table.columns.push_back("numeric_" + std::to_string(k));
  }
  const double scale = 1.0 / std::sqrt(step);
  Eigen::MatrixXd analytic(x.size(), count), numeric(x.size(), count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    for (std::size_t j = 0; j < x.size(); ++j) {
      analytic(static_cast<Eigen::Index>(j), col) =
          analytic_mode(static_cast<unsigned>(k), m, sigma, schmidt_number, x[j]);
    }
    numeric.col(col) = scale * modes.col(col);
    if (numeric.col(col).dot(analytic.col(col)) < 0.0) numeric.col(col) *= -1.0;
    out.max_abs_diff =
        std::max(out.max_abs_diff, (numeric.col(col) - analytic.col(col)).cwiseAbs().maxCoeff());
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto row_index = static_cast<Eigen::Index>(j);
    std::vector<Cell> row{integer(j), x[j]};
    for (std::size_t k = 0; k < count; ++k) {
      row.emplace_back(analytic(row_index, static_cast<Eigen::Index>(k)));
      row.emplace_back(numeric(row_index, static_cast<Eigen::Index>(k)));
    }
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

void require_grid_size(std::size_t n, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + " must be at least 2");
}

}  // namespace

const char* command_name(Command command) {
  switch (command) {
    case Command::table1:
      return "table1";
    case Command::modes:
      return "modes";
    case Command::decompose:
      return "decompose";
    case Command::mutual_info:
      return "mutual-info";
    case Command::thermo:
      return "thermo";
    case Command::simulate:
      return "simulate";
    case Command::info:
      return "info";
  }
  return "unknown";
}

void validate(const RunConfig& config) {
  const bool uses_gaussian = config.command == Command::table1 || config.command == Command::modes ||
                             config.command == Command::mutual_info;
  if (uses_gaussian) {
    config.params.validate();
    require_positive(config.span, "span");
  }
  if (config.count && *config.count == 0) throw std::invalid_argument("count must be positive");

  switch (config.command) {
    case Command::table1:
      if (config.grids.empty()) throw std::invalid_argument("at least one grid size is required");
      for (const auto n : config.grids) require_grid_size(n, "grid size");
      break;
    case Command::modes:
      require_grid_size(config.n, "n");
      if (config.count.value_or(kDefaultModeCount) > config.n) {
        throw std::invalid_argument("count cannot exceed the number of grid points");
      }
      break;
    case Command::mutual_info:
      require_grid_size(config.n, "n");
      break;
    case Command::decompose:
      if (config.state_path.empty()) throw std::invalid_argument("a state file is required");
      if (config.n_symbols == 0) throw std::invalid_argument("n-symbols must be positive");
      break;
    case Command::thermo:
      require_positive(config.beta_min, "beta-min");
      require_positive(config.beta_max, "beta-max");
      if (config.beta_max < config.beta_min) {
        throw std::invalid_argument("beta-max must be >= beta-min");
      }
      if (config.points == 0) throw std::invalid_argument("points must be positive");
      if (config.points > 1 && config.beta_max == config.beta_min) {
        throw std::invalid_argument("a sweep of several points needs beta-max > beta-min");
      }
      break;
    case Command::simulate:
      if (config.weights_path.empty()) config.params.validate();
      if (config.n_symbols == 0) throw std::invalid_argument("n must be positive");
      if (config.trials == 0) throw std::invalid_argument("trials must be positive");
      if (config.seed > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw std::invalid_argument("seed must fit in a signed 64-bit integer");
      }
      break;
    case Command::info:
      if (config.schmidt_number) {
        if (!(*config.schmidt_number >= 1.0) || !std::isfinite(*config.schmidt_number)) {
          throw std::invalid_argument("K must be finite and >= 1");
        }
      } else {
        config.params.validate();
      }
      if (config.n_symbols == 0) throw std::invalid_argument("n-symbols must be positive");
      break;
  }
}

OutputFormat effective_format(const RunConfig& config) {
  if (config.format) return *config.format;
  return config.command == Command::simulate ? OutputFormat::json : OutputFormat::csv;
}

Report cmd_table1(const RunConfig& config) {
  const double theory_k = schmidt_number_from_rho(config.params.rho);
  const auto theory = analytic_weights(theory_k, config.count.value_or(kDefaultTableRows));
  std::size_t rows = 0;
  while (rows < theory.size() && theory[rows] > 0.0) ++rows;

  std::vector<std::vector<double>> numeric_weights;
  std::vector<double> numeric_k;
  for (const auto n : config.grids) {
    const SchmidtSpectrum spectrum = decompose(gaussian_state(config.params, n, config.span));
    std::vector<double> w(rows, 0.0);
    std::copy_n(spectrum.weights.begin(), std::min(rows, spectrum.size()), w.begin());
    numeric_weights.push_back(std::move(w));
    numeric_k.push_back(schmidt_number(spectrum.weights));
  }

  Table values{"table1", {"row", "theory"}, {}};
  Table errors{"abs_error", {"row"}, {}};
  for (const auto n : config.grids) {
    values.columns.push_back("n" + std::to_string(n));
    errors.columns.push_back("n" + std::to_string(n));
  }
  for (std::size_t k = 0; k <= rows; ++k) {
    const bool k_row = k == rows;
    const double expected = k_row ? theory_k : theory[k];
    const std::string label = k_row ? "K" : "lambda_" + std::to_string(k + 1);
    std::vector<Cell> value_row{text(label), expected};
    std::vector<Cell> error_row{text(label)};
    for (std::size_t g = 0; g < config.grids.size(); ++g) {
      const double numeric = k_row ? numeric_k[g] : numeric_weights[g][k];
      value_row.emplace_back(numeric);
      error_row.emplace_back(std::fabs(numeric - expected));
    }
    values.rows.push_back(std::move(value_row));
    errors.rows.push_back(std::move(error_row));
  }

  Report report{"table1", {}, {}};
  report.summary = {{"rho", config.params.rho},
                    {"m1", config.params.m1},
                    {"m2", config.params.m2},
                    {"sigma1", config.params.sigma1},
                    {"sigma2", config.params.sigma2},
                    {"span", config.span}};
  report.tables.push_back(std::move(values));
  report.tables.push_back(std::move(errors));
  return report;
}

Report cmd_modes(const RunConfig& config) {
  const std::size_t count = config.count.value_or(kDefaultModeCount);
  const DiscretizedState state = gaussian_state(config.params, config.n, config.span);
  const SchmidtSpectrum spectrum = decompose(state);
  const double k_theory = schmidt_number_from_rho(config.params.rho);
  const GridSpec& grid = state.grid;

  AxisModes axis1 = compare_axis("modes1", grid.midpoints1(), grid.step1(), spectrum.modes1, count,
                                 config.params.m1, config.params.sigma1, k_theory);
  AxisModes axis2 = compare_axis("modes2", grid.midpoints2(), grid.step2(), spectrum.modes2, count,
                                 config.params.m2, config.params.sigma2, k_theory);

  Report report{"modes", {}, {}};
  report.summary = {{"n", integer(config.n)},
                    {"span", config.span},
                    {"count", integer(count)},
                    {"schmidt_number", k_theory},
                    {"max_abs_diff_axis1", axis1.max_abs_diff},
                    {"max_abs_diff_axis2", axis2.max_abs_diff}};
  report.tables.push_back(std::move(axis1.table));
  report.tables.push_back(std::move(axis2.table));
  return report;
}

Report cmd_decompose(const RunConfig& config) {
  const DiscretizedState state = read_state_file(config.state_path);
  const SchmidtSpectrum spectrum = decompose(state);
  const double k = schmidt_number(spectrum.weights);
  const double entropy = entanglement_entropy(spectrum.weights, config.log_base);
  const InfoReport info = make_info_report(k, config.n_symbols);

  double weight_sum = 0.0;
  for (const double w : spectrum.weights) weight_sum += w;

  Report report{"decompose", {}, {}};
  report.summary = {{"n1", integer(state.grid.n1)},
                    {"n2", integer(state.grid.n2)},
                    {"schmidt_number", k},
                    {"entropy", entropy},
                    {"log_base", text(to_string(config.log_base))},
                    {"weight_sum", weight_sum},
                    {"n_symbols", integer(info.n_symbols)},
                    {"info_bits", info.info_bits},
                    {"info_nats", info.info_nats},
                    {"log_W", info.microstates.log_value},
                    {"W_in_log_space", info.microstates.in_log_space()}};
  if (info.microstates.value) report.summary.emplace_back("W", *info.microstates.value);
  report.summary.emplace_back("p_coincidence", info.p_coincidence);

  const std::size_t rows = std::min(config.count.value_or(spectrum.size()), spectrum.size());
  Table table{"spectrum", {"k", "lambda_k"}, {}};
  for (std::size_t i = 0; i < rows; ++i) table.rows.push_back({integer(i), spectrum.weights[i]});
  report.tables.push_back(std::move(table));

  if (!config.modes_output_path.empty()) {
    std::ofstream out(config.modes_output_path);
    if (!out) {
      throw std::invalid_argument("cannot write modes file '" + config.modes_output_path + "'");
    }
    const std::size_t modes = std::min<std::size_t>(rows, 16);
    Report mode_report{"modes", {}, {}};
    mode_report.tables.push_back(mode_table("modes1", state.grid.midpoints1(), state.grid.step1(),
                                            spectrum.modes1, modes));
    mode_report.tables.push_back(mode_table("modes2", state.grid.midpoints2(), state.grid.step2(),
                                            spectrum.modes2, modes));
    write_csv(out, mode_report);
  }
  return report;
}

Report cmd_mutual_info(const RunConfig& config) {
  const DiscretizedState state = gaussian_state(config.params, config.n, config.span);
  const double numeric = shannon_mi_numeric(joint_probability(state), config.log_base);
  const double closed_form = shannon_mi_gaussian(config.params.rho, config.log_base);

  Report report{"mutual-info", {}, {}};
  report.summary = {{"n", integer(config.n)},
                    {"span", config.span},
                    {"log_base", text(to_string(config.log_base))},
                    {"mi_numeric", numeric},
                    {"mi_closed_form", closed_form},
                    {"abs_error", std::fabs(numeric - closed_form)}};
  return report;
}

Report cmd_thermo(const RunConfig& config) {
  Table table{"thermo", {"beta", "K", "rho_squared", "entropy"}, {}};
  for (const auto& row : thermo_sweep(config.beta_min, config.beta_max, config.points,
                                      config.log_base)) {
    table.rows.push_back({row.beta, row.schmidt_number, row.rho_squared, row.entropy});
  }
  Report report{"thermo", {{"log_base", text(to_string(config.log_base))}}, {}};
  report.tables.push_back(std::move(table));
  return report;
}

Report cmd_simulate(const RunConfig& config) {
  const std::vector<double> weights =
      config.weights_path.empty()
          ? truncated_geometric_weights(schmidt_number_from_rho(config.params.rho))
          : read_weights_file(config.weights_path);
  const CoincidenceReport r =
      run_coincidence_experiment(weights, config.n_symbols, config.trials, config.seed);

  Report report{"simulate", {}, {}};
  report.summary = {{"n_symbols", integer(r.n_symbols)},
                    {"trials", integer(r.trials)},
                    {"hits", integer(r.hits)},
                    {"position_hits", integer(r.position_hits)},
                    {"p_hat", r.p_hat},
                    {"p_theory", r.p_theory},
                    {"std_err", r.std_err},
                    {"seed", static_cast<std::int64_t>(r.seed)},
                    {"schmidt_number", schmidt_number(weights)},
                    {"symbols", integer(weights.size())}};
  return report;
}

Report cmd_info(const RunConfig& config) {
  const double k = config.schmidt_number ? *config.schmidt_number
                                         : schmidt_number_from_rho(config.params.rho);
  const InfoReport info = make_info_report(k, config.n_symbols);
  Report report{"info", {}, {}};
  report.summary = {{"schmidt_number", k},
                    {"rho_squared", rho_squared_from_K(k)},
                    {"n_symbols", integer(info.n_symbols)},
                    {"info_bits", info.info_bits},
                    {"info_nats", info.info_nats},
                    {"log_W", info.microstates.log_value},
                    {"W_in_log_space", info.microstates.in_log_space()}};
  if (info.microstates.value) report.summary.emplace_back("W", *info.microstates.value);
  report.summary.emplace_back("p_coincidence", info.p_coincidence);
  report.summary.emplace_back("closed_form_entropy", closed_form_entropy(k, config.log_base));
  report.summary.emplace_back("log_base", text(to_string(config.log_base)));
  return report;
}

Report execute(const RunConfig& config) {
  validate(config);
  switch (config.command) {
    case Command::table1:
      return cmd_table1(config);
    case Command::modes:
      return cmd_modes(config);
    case Command::decompose:
      return cmd_decompose(config);
    case Command::mutual_info:
      return cmd_mutual_info(config);
    case Command::thermo:
      return cmd_thermo(config);
    case Command::simulate:
      return cmd_simulate(config);
    case Command::info:
      return cmd_info(config);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace schmidtcv
