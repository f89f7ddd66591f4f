#include "schmidtcv/report.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "schmidtcv/number_format.hpp"

namespace schmidtcv {

namespace {

std::string csv_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

}  // namespace

const Table& Report::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("report has no table '" + name + "'");
}

const Cell& Report::value(const std::string& key) const {
  for (const auto& [k, v] : summary) {
    if (k == key) return v;
  }
  throw std::out_of_range("report has no summary entry '" + key + "'");
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("output format must be 'csv' or 'json', got '" + text + "'");
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_text(row[c]);
    out << '\n';
  }
}

void write_csv(std::ostream& out, const Report& report) {
  bool first = true;
  if (!report.summary.empty()) {
    Table summary{"summary", {"quantity", "value"}, {}};
    for (const auto& [key, value] : report.summary) summary.rows.push_back({key, value});
    out << "# summary\n";
    write_csv(out, summary);
    first = false;
  }
  for (const auto& table : report.tables) {
    if (!first) out << '\n';
    out << "# " << table.name << '\n';
    write_csv(out, table);
    first = false;
  }
}

void write_json(std::ostream& out, const Report& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["summary"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.summary) doc["summary"][key] = json_value(value);
  doc["tables"] = nlohmann::ordered_json::object();
  for (const auto& table : report.tables) {
    nlohmann::ordered_json t;
    t["columns"] = table.columns;
    t["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& cell : row) r.push_back(json_value(cell));
      t["rows"].push_back(std::move(r));
    }
    doc["tables"][table.name] = std::move(t);
  }
  out << doc.dump(2) << '\n';
}

void write_report(std::ostream& out, const Report& report, OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_csv(out, report);
  } else {
    write_json(out, report);
  }
}

}  // namespace schmidtcv
