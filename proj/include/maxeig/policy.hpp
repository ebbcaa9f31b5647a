#pragma once

#include <algorithm>
#include <cmath>

namespace maxeig {

// Knobs shared by every numeric routine. Entries at or below zero_threshold
// are treated as structural zeros (absent arcs), everything else as weights.
struct NumericPolicy {
  double rel_tol = 1e-9;
  double zero_threshold = 0.0;
  bool log_domain = true;  // long products go through exp(sum of logs)
  int jump_limit = 9;      // refuse n! enumeration beyond this order

  bool is_zero(double v) const { return v <= zero_threshold; }

  // Relative comparison with an absolute floor of rel_tol for values near 0.
  bool close(double a, double b) const {
    double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return std::fabs(a - b) <= rel_tol * scale;
  }
};

}  // namespace maxeig
