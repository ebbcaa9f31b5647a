#include "maxeig/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace maxeig {

namespace {

void check_entry(double v, const std::string& where) {
  if (std::isnan(v) || std::isinf(v)) {
    throw std::invalid_argument(where + ": entries must be finite");
  }
  if (v < 0.0) {
    throw std::invalid_argument(where + ": entries must be nonnegative, got " +
                                std::to_string(v));
  }
}

}  // namespace

Vector::Vector(std::initializer_list<double> values)
    : Vector(std::vector<double>(values)) {}

Vector::Vector(std::vector<double> values) : v_(std::move(values)) {
  for (double v : v_) check_entry(v, "Vector");
}

Vector Vector::zeros(int n) { return Vector(std::vector<double>(n, 0.0)); }

Vector Vector::ones(int n) { return Vector(std::vector<double>(n, 1.0)); }

Vector Vector::unit(int n, int i) {
  std::vector<double> v(n, 0.0);
  v.at(static_cast<size_t>(i)) = 1.0;
  return Vector(std::move(v));
}

double Vector::max() const {
  double m = 0.0;
  for (double v : v_) m = std::max(m, v);
  return m;
}

Matrix::Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
  if (n < 1) throw std::invalid_argument("Matrix: order must be at least 1");
}

Matrix::Matrix(int n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (n < 1) throw std::invalid_argument("Matrix: order must be at least 1");
  if (a_.size() != static_cast<size_t>(n) * n) {
    throw std::invalid_argument("Matrix: expected " + std::to_string(n * n) +
                                " entries, got " + std::to_string(a_.size()));
  }
  for (double v : a_) check_entry(v, "Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  n_ = static_cast<int>(rows.size());
  if (n_ < 1) throw std::invalid_argument("Matrix: order must be at least 1");
  a_.reserve(static_cast<size_t>(n_) * n_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) {
      throw std::invalid_argument("Matrix: rows must all have length " +
                                  std::to_string(n_));
    }
    for (double v : row) {
      check_entry(v, "Matrix");
      a_.push_back(v);
    }
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size());
  for (int i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace maxeig
