#include "schmidtcv/state_file.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "schmidtcv/errors.hpp"
#include "schmidtcv/number_format.hpp"

namespace schmidtcv {

namespace {

struct Location {
  std::size_t line;
  std::size_t column;
};

Location locate(const std::string& text, std::size_t offset) {
  Location loc{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

[[noreturn]] void fail_at(const std::string& text, std::size_t offset, const std::string& what) {
  const Location loc = locate(text, offset);
  throw ParseError(loc.line, loc.column, what);
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Returns the offset one past the closing brace of the header object.
std::size_t header_end(const std::string& text, std::size_t begin) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = begin; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i + 1;
    }
  }
  fail_at(text, text.size(), "unterminated JSON header");
}

template <typename T>
T header_field(const nlohmann::json& header, const char* key, const std::string& text,
               std::size_t offset) {
  if (!header.contains(key)) fail_at(text, offset, std::string("header is missing \"") + key + "\"");
  const auto& value = header.at(key);
  if constexpr (std::is_integral_v<T>) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
      fail_at(text, offset, std::string("header field \"") + key + "\" must be a non-negative integer");
    }
  } else if (!value.is_number()) {
    fail_at(text, offset, std::string("header field \"") + key + "\" must be a number");
  }
  return value.get<T>();
}

}  // namespace

DiscretizedState read_state(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};

  std::size_t pos = 0;
  while (pos < text.size() && (is_blank(text[pos]) || text[pos] == '\n')) ++pos;
  if (pos == text.size() || text[pos] != '{') fail_at(text, pos, "expected JSON header object");
  const std::size_t header_begin = pos;
  const std::size_t body_begin = header_end(text, header_begin);

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(text.begin() + static_cast<std::ptrdiff_t>(header_begin),
                                   text.begin() + static_cast<std::ptrdiff_t>(body_begin));
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    fail_at(text, header_begin + byte, std::string("invalid JSON header: ") + e.what());
  }
  if (!header.is_object()) fail_at(text, header_begin, "header must be a JSON object");

  GridSpec grid;
  grid.n1 = header_field<std::size_t>(header, "n1", text, header_begin);
  grid.n2 = header_field<std::size_t>(header, "n2", text, header_begin);
  grid.lo1 = header_field<double>(header, "lo1", text, header_begin);
  grid.hi1 = header_field<double>(header, "hi1", text, header_begin);
  grid.lo2 = header_field<double>(header, "lo2", text, header_begin);
  grid.hi2 = header_field<double>(header, "hi2", text, header_begin);
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    fail_at(text, header_begin, e.what());
  }

  Eigen::MatrixXd samples(grid.n1, grid.n2);
  std::size_t row = 0;
  pos = body_begin;
  while (pos < text.size()) {
    std::size_t line_end = text.find('\n', pos);
    if (line_end == std::string::npos) line_end = text.size();

    std::size_t first = pos;
    while (first < line_end && is_blank(text[first])) ++first;
    if (first == line_end) {
      pos = line_end + 1;
      continue;
    }
    if (row == grid.n1) fail_at(text, first, "more than n1 = " + std::to_string(grid.n1) + " rows");

    std::size_t col = 0;
    std::size_t field_begin = pos;
    while (true) {
      std::size_t field_end = text.find(',', field_begin);
      if (field_end == std::string::npos || field_end > line_end) field_end = line_end;
      std::size_t a = field_begin;
      std::size_t b = field_end;
      while (a < b && is_blank(text[a])) ++a;
      while (b > a && is_blank(text[b - 1])) --b;
      if (col == grid.n2) {
        fail_at(text, a, "more than n2 = " + std::to_string(grid.n2) + " columns");
      }
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(text.data() + a, text.data() + b, value);
      if (a == b || ec != std::errc() || ptr != text.data() + b) {
        fail_at(text, a, "expected a real number, got '" + text.substr(a, b - a) + "'");
      }
      samples(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
      ++col;
      if (field_end == line_end) break;
      field_begin = field_end + 1;
    }
    if (col != grid.n2) {
      fail_at(text, line_end, "row has " + std::to_string(col) + " columns, expected " +
                                  std::to_string(grid.n2));
    }
    ++row;
    pos = line_end + 1;
  }
  if (row != grid.n1) {
    fail_at(text, text.size(),
            "found " + std::to_string(row) + " rows, expected " + std::to_string(grid.n1));
  }
  return normalize_samples(grid, std::move(samples));
}

DiscretizedState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
  return read_state(in);
}

void write_state(std::ostream& out, const GridSpec& grid, const Eigen::MatrixXd& samples) {
  grid.validate();
  if (static_cast<std::size_t>(samples.rows()) != grid.n1 ||
      static_cast<std::size_t>(samples.cols()) != grid.n2) {
    throw std::invalid_argument("sample matrix shape does not match the grid");
  }
  out << "{\"n1\": " << grid.n1 << ", \"n2\": " << grid.n2 << ", \"lo1\": " << format_number(grid.lo1)
      << ", \"hi1\": " << format_number(grid.hi1) << ", \"lo2\": " << format_number(grid.lo2)
      << ", \"hi2\": " << format_number(grid.hi2) << "}\n";
  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    for (Eigen::Index j = 0; j < samples.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_number(samples(i, j));
    }
    out << '\n';
  }
}

void write_state_file(const std::string& path, const GridSpec& grid, const Eigen::MatrixXd& samples) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write state file '" + path + "'");
  write_state(out, grid, samples);
}

std::vector<double> read_weights(std::istream& in) {
  std::vector<double> weights;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t pos = 0;
    while (pos < line.size() && is_blank(line[pos])) ++pos;
    if (pos < line.size() && line[pos] == '#') continue;
    while (pos < line.size()) {
      while (pos < line.size() && (is_blank(line[pos]) || line[pos] == ',')) ++pos;
      if (pos == line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !is_blank(line[end]) && line[end] != ',') ++end;
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
      if (ec != std::errc() || ptr != line.data() + end) {
        throw ParseError(line_number, pos + 1,
                         "expected a real number, got '" + line.substr(pos, end - pos) + "'");
      }
      weights.push_back(value);
      pos = end;
    }
  }
  if (weights.empty()) throw ParseError(line_number + 1, 1, "weights file contains no values");
  return weights;
}

std::vector<double> read_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open weights file '" + path + "'");
  return read_weights(in);
}

}  // namespace schmidtcv
