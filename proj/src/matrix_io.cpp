#include "specbound/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace specbound {

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

std::vector<double> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<double> row;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && is_separator(*p)) ++p;
    if (p == end) break;
    const char* start = p;
    if (*p == '+') ++p;
    double v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || (next < end && !is_separator(*next))) {
      const char* stop = start;
      while (stop < end && !is_separator(*stop)) ++stop;
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": cannot parse '" +
                                        std::string(start, stop) + "' as a number");
    }
    row.push_back(v);
    p = next;
  }
  return row;
}

}  // namespace

Matrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    auto row = parse_row(line, line_no);
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": ragged row with " +
                                        std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::Parse, "no matrix rows found");
  return Matrix::from_rows(rows);
}

Matrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json& body = doc.is_object() && doc.contains("matrix") ? doc["matrix"] : doc;
  if (!body.is_array() || body.empty()) {
    throw Error(ErrorKind::Parse, "expected a non-empty array of rows");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& r : body) {
    if (!r.is_array()) throw Error(ErrorKind::Parse, "matrix row is not an array");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) throw Error(ErrorKind::Parse, "matrix entry is not a number");
      row.push_back(v.get<double>());
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorKind::Parse, "ragged row in JSON matrix");
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return format == MatrixFormat::Json ? parse_matrix_json(text) : parse_matrix_text(text);
}

MatrixFormat format_from_name(const std::string& name) {
  if (name == "text") return MatrixFormat::Text;
  if (name == "csv") return MatrixFormat::Csv;
  if (name == "json") return MatrixFormat::Json;
  throw Error(ErrorKind::Parse, "unknown matrix format '" + name + "'");
}

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string format_scalar(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

std::string format_matrix_text(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) out += ' ';
      out += format_number(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace specbound
