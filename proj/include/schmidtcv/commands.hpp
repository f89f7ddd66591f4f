#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schmidtcv/gaussian_model.hpp"
#include "schmidtcv/log_base.hpp"
#include "schmidtcv/report.hpp"

namespace schmidtcv {

enum class Command { table1, modes, decompose, mutual_info, thermo, simulate, info };

/// Default grid half-width in standard deviations.
inline constexpr double kDefaultSpan = 12.0;

struct RunConfig {
  Command command = Command::table1;
  /// Defaults to the reference example: rho = 0.9, means (1, -1), sigmas (2, 1).
  GaussianParams params{1.0, -1.0, 2.0, 1.0, 0.9};
  std::size_t n = 100;
  std::vector<std::size_t> grids{30, 50, 100};
  double span = kDefaultSpan;
  std::optional<std::size_t> count;
  LogBase log_base = LogBase::e;
  std::optional<OutputFormat> format;
  std::string output_path;

  std::string state_path;
  std::string modes_output_path;
  std::size_t n_symbols = 1;
  std::optional<double> schmidt_number;

  std::string weights_path;
  std::size_t trials = 1'000'000;
  std::uint64_t seed = 20060101;

  double beta_min = 1e-3;
  double beta_max = 50.0;
  std::size_t points = 200;
};

const char* command_name(Command command);

/// Checks every option the selected command reads. Throws std::invalid_argument.
void validate(const RunConfig& config);

/// json for simulate, csv otherwise, unless the config says otherwise.
OutputFormat effective_format(const RunConfig& config);

Report cmd_table1(const RunConfig& config);
Report cmd_modes(const RunConfig& config);
Report cmd_decompose(const RunConfig& config);
Report cmd_mutual_info(const RunConfig& config);
Report cmd_thermo(const RunConfig& config);
Report cmd_simulate(const RunConfig& config);
Report cmd_info(const RunConfig& config);

/// Validates and dispatches on config.command.
Report execute(const RunConfig& config);

}  // namespace schmidtcv
