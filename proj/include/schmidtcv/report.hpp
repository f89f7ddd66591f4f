#pragma once

// Tabular results emitted by the command line, rendered as CSV or JSON.
// Both renderings carry the same numbers: CSV uses 17 significant digits
// and JSON uses round-trip double formatting.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace schmidtcv {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<Table> tables;

  const Table& table(const std::string& name) const;
  const Cell& value(const std::string& key) const;
};

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(const std::string& text);

/// Sections separated by a blank line, each introduced by "# <name>".
/// The summary, if any, comes first as a "quantity,value" section.
void write_csv(std::ostream& out, const Report& report);
void write_csv(std::ostream& out, const Table& table);

/// {"command": ..., "summary": {...}, "tables": {name: {"columns": [...], "rows": [[...]]}}}
void write_json(std::ostream& out, const Report& report);

void write_report(std::ostream& out, const Report& report, OutputFormat format);

}  // namespace schmidtcv
