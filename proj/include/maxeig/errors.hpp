#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace maxeig {

// Malformed input (CSV/JSON matrix files, bad shapes or values).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A request would exceed a configured enumeration limit.
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative method failed to settle; carries the last normalized iterate so
// callers can inspect it or fall back to another method.
struct ConvergenceError : std::runtime_error {
  std::vector<double> last_iterate;
  ConvergenceError(const std::string& what, std::vector<double> iterate)
      : std::runtime_error(what), last_iterate(std::move(iterate)) {}
};

// Reciprocity or positivity violation found while certifying a matrix.
// Carries the worst-offending pair.
struct SrError : std::runtime_error {
  int i, j;
  double value;
  SrError(const std::string& what, int i_, int j_, double value_)
      : std::runtime_error(what), i(i_), j(j_), value(value_) {}
};

}  // namespace maxeig
