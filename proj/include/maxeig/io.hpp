#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "maxeig/matrix.hpp"

namespace maxeig {

// CSV: one row per line, comma-separated nonnegative decimals, no header.
// JSON: {"n": <int>, "rows": [[...], ...]}. The format is picked by the
// first non-whitespace byte: '{' means JSON.
Matrix parse_matrix(const std::string& text);

// Reads from the path, or from stdin when path is "-".
Matrix read_matrix_file(const std::string& path);

// Raw bytes of the same input, for digests.
std::string read_input_bytes(const std::string& path);

std::string to_csv(const Matrix& a);

nlohmann::ordered_json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const nlohmann::json& j);

// FNV-1a 64-bit over the raw bytes, rendered as "fnv1a64:<hex>".
std::string digest(const std::string& bytes);

}  // namespace maxeig
