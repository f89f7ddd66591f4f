#pragma once

// State file: a JSON header {"n1", "n2", "lo1", "hi1", "lo2", "hi2"}
// followed by n1 comma-separated rows of n2 amplitude samples taken at the
// cell midpoints. Samples need not be normalized; loading normalizes them.
//
//   {"n1": 2, "n2": 3, "lo1": -1, "hi1": 1, "lo2": 0, "hi2": 3}
//   0.1, 0.2, 0.3
//   0.4, 0.5, 0.6

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schmidtcv/discretize.hpp"

namespace schmidtcv {

/// Parses and normalizes a state. Throws ParseError with the 1-based line
/// and column of the offending text.
DiscretizedState read_state(std::istream& in);
DiscretizedState read_state_file(const std::string& path);

void write_state(std::ostream& out, const GridSpec& grid, const Eigen::MatrixXd& samples);
void write_state_file(const std::string& path, const GridSpec& grid, const Eigen::MatrixXd& samples);

/// Weights file: real numbers separated by commas, blanks or newlines.
/// Lines starting with '#' are ignored. Values are not validated here.
std::vector<double> read_weights(std::istream& in);
std::vector<double> read_weights_file(const std::string& path);

}  // namespace schmidtcv
