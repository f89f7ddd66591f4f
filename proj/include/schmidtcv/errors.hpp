#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schmidtcv {

// Invalid arguments and domain violations are reported with
// std::invalid_argument / std::domain_error. The types below cover the
// remaining failure classes the command line distinguishes.

/// Malformed input text; carries a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A numerical routine failed to produce a trustworthy result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Samples could not be scaled to unit norm (all zero or non-finite norm).
class NormalizationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace schmidtcv
