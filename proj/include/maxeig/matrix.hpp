#pragma once

#include <initializer_list>
#include <vector>

namespace maxeig {

// Nonnegative finite vector. Construction validates; mutation through
// operator[] is the caller's responsibility.
class Vector {
 public:
  Vector() = default;
  Vector(std::initializer_list<double> values);
  explicit Vector(std::vector<double> values);

  static Vector zeros(int n);
  static Vector ones(int n);
  static Vector unit(int n, int i);  // indicator of position i

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  double operator[](int i) const { return v_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return v_[static_cast<size_t>(i)]; }
  const std::vector<double>& data() const { return v_; }

  double max() const;

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> v_;
};

// Square nonnegative matrix, dense row-major. Entry (i, j) weights the jump
// from row index i to column index j; cycle products never depend on which
// way the arcs are read.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n);  // all zeros
  Matrix(int n, std::vector<double> row_major);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);  // unit of (max, *): diagonal of ones
  static Matrix diagonal(const Vector& d);

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  double& operator()(int i, int j) { return a_[idx(i, j)]; }
  const std::vector<double>& data() const { return a_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) +
           static_cast<size_t>(j);
  }
  int n_ = 0;
  std::vector<double> a_;
};

}  // namespace maxeig
