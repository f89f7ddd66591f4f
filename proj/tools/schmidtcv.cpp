// Command-line front end. Exit codes: 0 success, 1 invalid input,
// 2 numerical failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schmidtcv/commands.hpp"
#include "schmidtcv/errors.hpp"

namespace {

using schmidtcv::Command;
using schmidtcv::RunConfig;

constexpr int kExitInvalidInput = 1;
constexpr int kExitNumerical = 2;

void add_gaussian_options(CLI::App* app, RunConfig& config) {
  app->add_option("--rho", config.params.rho, "Correlation coefficient, |rho| < 1")
      ->check(CLI::Range(-1.0, 1.0));
  app->add_option("--m1", config.params.m1, "Mean of x1");
  app->add_option("--m2", config.params.m2, "Mean of x2");
  app->add_option("--sigma1", config.params.sigma1, "Standard deviation of x1")
      ->check(CLI::PositiveNumber);
  app->add_option("--sigma2", config.params.sigma2, "Standard deviation of x2")
      ->check(CLI::PositiveNumber);
}

void add_grid_options(CLI::App* app, RunConfig& config) {
  app->add_option("--n", config.n, "Grid points per axis")->check(CLI::Range(2, 100000));
  app->add_option("--span", config.span, "Grid half-width in standard deviations")
      ->check(CLI::PositiveNumber);
}

void add_log_base_option(CLI::App* app, std::string& log_base) {
  app->add_option("--log-base", log_base, "Logarithm base: 2 or e")
      ->check(CLI::IsMember({"2", "e"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt decomposition and entanglement measures of bipartite states"};
  app.require_subcommand(1);

  RunConfig config;
  std::string log_base = "e";
  std::string format;
  std::size_t count = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", config.output_path, "Output path (default: stdout)");
  };

  auto* table1 = app.add_subcommand("table1", "Theory vs numeric Schmidt weights on several grids");
  add_gaussian_options(table1, config);
  table1->add_option("--grids", config.grids, "Grid sizes")->delimiter(',');
  table1->add_option("--span", config.span, "Grid half-width in standard deviations")
      ->check(CLI::PositiveNumber);
  table1->add_option("--count", count, "Number of weights to list")->check(CLI::PositiveNumber);
  add_common(table1);

  auto* modes = app.add_subcommand("modes", "Analytic and numeric Schmidt modes on the grid");
  add_gaussian_options(modes, config);
  add_grid_options(modes, config);
  modes->add_option("--count", count, "Number of mode pairs")->check(CLI::PositiveNumber);
  add_common(modes);

  auto* decompose = app.add_subcommand("decompose", "Schmidt spectrum of a state file");
  decompose->add_option("state", config.state_path, "State file")->required();
  decompose->add_option("--n-symbols", config.n_symbols, "String length for information measures")
      ->check(CLI::PositiveNumber);
  decompose->add_option("--count", count, "Number of weights to list")->check(CLI::PositiveNumber);
  decompose->add_option("--modes-output", config.modes_output_path, "Write mode values as CSV");
  add_log_base_option(decompose, log_base);
  add_common(decompose);

  auto* mutual_info = app.add_subcommand("mutual-info", "Grid mutual information vs log K");
  add_gaussian_options(mutual_info, config);
  add_grid_options(mutual_info, config);
  add_log_base_option(mutual_info, log_base);
  add_common(mutual_info);

  auto* thermo = app.add_subcommand("thermo", "Sweep of K, rho^2 and entropy over beta");
  thermo->add_option("--beta-min", config.beta_min, "Smallest beta")->check(CLI::PositiveNumber);
  thermo->add_option("--beta-max", config.beta_max, "Largest beta")->check(CLI::PositiveNumber);
  thermo->add_option("--points", config.points, "Number of log-spaced points")
      ->check(CLI::PositiveNumber);
  add_log_base_option(thermo, log_base);
  add_common(thermo);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo accidental coincidence experiment");
  auto* rho_option = simulate->add_option("--rho", config.params.rho,
                                          "Use the Gaussian spectrum for this rho")
                         ->check(CLI::Range(-1.0, 1.0));
  simulate->add_option("--weights-file", config.weights_path, "Read weights from a file")
      ->excludes(rho_option);
  simulate->add_option("--n", config.n_symbols, "Symbols per string")->check(CLI::PositiveNumber);
  simulate->add_option("--trials", config.trials, "Number of string pairs")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", config.seed, "Random seed");
  add_common(simulate);

  auto* info = app.add_subcommand("info", "Schmidt information for a Schmidt number");
  auto* k_option = info->add_option("--K", config.schmidt_number, "Schmidt number K >= 1");
  info->add_option("--rho", config.params.rho, "Derive K from rho")
      ->check(CLI::Range(-1.0, 1.0))
      ->excludes(k_option);
  info->add_option("--n-symbols", config.n_symbols, "String length")->check(CLI::PositiveNumber);
  add_log_base_option(info, log_base);
  add_common(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {table1, Command::table1},      {modes, Command::modes},   {decompose, Command::decompose},
      {mutual_info, Command::mutual_info}, {thermo, Command::thermo}, {simulate, Command::simulate},
      {info, Command::info}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }

  try {
    config.log_base = schmidtcv::parse_log_base(log_base);
    if (!format.empty()) config.format = schmidtcv::parse_output_format(format);
    if (count > 0) config.count = count;

    const schmidtcv::Report report = schmidtcv::execute(config);
    const auto output_format = schmidtcv::effective_format(config);
    if (config.output_path.empty()) {
      schmidtcv::write_report(std::cout, report, output_format);
    } else {
      std::ofstream out(config.output_path);
      if (!out) {
        std::cerr << "error: cannot write '" << config.output_path << "'\n";
        return kExitInvalidInput;
      }
      schmidtcv::write_report(out, report, output_format);
    }
  } catch (const schmidtcv::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const schmidtcv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::logic_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
