#include "maxeig/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "maxeig/errors.hpp"

namespace maxeig {

namespace {

Matrix matrix_from_rows(std::vector<std::vector<double>> rows) {
  const size_t n = rows.size();
  if (n == 0) throw ParseError("matrix has no rows");
  std::vector<double> flat;
  flat.reserve(n * n);
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n) + " (matrix must be square)");
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  try {
    return Matrix(static_cast<int>(n), std::move(flat));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Matrix parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.back() == ',') {
      throw ParseError("line " + std::to_string(lineno) + ": trailing comma");
    }
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    size_t col = 0;
    while (std::getline(ls, cell, ',')) {
      ++col;
      size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ", column " +
                         std::to_string(col) + ": not a number: \"" + cell +
                         "\"");
      }
      while (pos < cell.size() &&
             std::isspace(static_cast<unsigned char>(cell[pos]))) {
        ++pos;
      }
      if (pos != cell.size()) {
        throw ParseError("line " + std::to_string(lineno) + ", column " +
                         std::to_string(col) + ": trailing characters in \"" +
                         cell + "\"");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return matrix_from_rows(std::move(rows));
}

Matrix parse_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json_text(text) : parse_csv(text);
  }
  throw ParseError("empty input");
}

Matrix read_matrix_file(const std::string& path) {
  return parse_matrix(read_input_bytes(path));
}

std::string read_input_bytes(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string to_csv(const Matrix& a) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (j) os << ',';
      os << a(i, j);
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json matrix_to_json(const Matrix& a) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < a.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < a.size(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return nlohmann::ordered_json{{"n", a.size()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows")) {
    throw ParseError("expected an object with a \"rows\" array");
  }
  const auto& rows_j = j.at("rows");
  if (!rows_j.is_array()) throw ParseError("\"rows\" must be an array");
  std::vector<std::vector<double>> rows;
  for (const auto& r : rows_j) {
    if (!r.is_array()) throw ParseError("each row must be an array");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) throw ParseError("matrix entries must be numbers");
      row.push_back(v.get<double>());
    }
    rows.push_back(std::move(row));
  }
  if (j.contains("n")) {
    const auto& nj = j.at("n");
    if (!nj.is_number_integer() ||
        nj.get<long long>() != static_cast<long long>(rows.size())) {
      throw ParseError("\"n\" does not match the number of rows");
    }
  }
  return matrix_from_rows(std::move(rows));
}

std::string digest(const std::string& bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setfill('0') << std::setw(16) << h;
  return os.str();
}

}  // namespace maxeig
