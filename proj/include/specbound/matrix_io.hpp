#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "specbound/matrix.hpp"

namespace specbound {

enum class MatrixFormat { Text, Csv, Json };

/// Text format: '#' comment lines, one row per line, entries separated by
/// whitespace and/or commas. Ragged rows raise Parse; blank lines are skipped.
/// CSV uses the same reader.
Matrix parse_matrix_text(std::string_view text);
/// Either a bare array of rows or an object with a "matrix" member.
Matrix parse_matrix_json(std::string_view text);

Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format);
MatrixFormat format_from_name(const std::string& name);

/// Shortest representation that parses back to the identical double.
std::string format_number(double v);
/// Fixed significant-digit rendering for report scalars.
std::string format_scalar(double v, int significant = 12);

/// One row per line, entries separated by a single space, shortest
/// round-trip numbers; parse_matrix_text(format_matrix_text(m)) == m bitwise.
std::string format_matrix_text(const Matrix& m);

}  // namespace specbound
