#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxeig/matrix.hpp"
#include "maxeig/policy.hpp"

namespace maxeig {

enum class Method { Jump, Karp, Power };

// Elementary cycle i1 -> i2 -> ... -> iL -> i1 stored as its node list,
// rotated so the smallest node comes first. weight is the product of the
// entries a_{i1 i2} * ... * a_{iL i1}; geo_mean its length-th root.
struct Cycle {
  std::vector<int> nodes;
  double weight = 0.0;
  double geo_mean = 0.0;

  int length() const { return static_cast<int>(nodes.size()); }
  bool empty() const { return nodes.empty(); }
};

struct Eigenpair {
  double mu = 0.0;
  Vector x;  // normalized so the largest entry is exactly 1; empty if mu = 0
  Cycle critical_cycle;            // lexicographically smallest critical cycle
  std::vector<int> critical_nodes; // union over all critical cycles, sorted
  Method method = Method::Karp;
  bool irreducible = true;
  bool has_cycle = true;  // false for acyclic inputs (mu = 0)
};

// Same shape as the base matrix: base entries kept bit-exact where they lie
// on a cycle of geometric mean mu, zero elsewhere.
struct CriticalMatrix {
  Matrix base;
  Matrix entries;
};

// I (+) B (+) B^2 (+) ... (+) B^(n-1). Assumes no cycle product of B exceeds
// 1 beyond roundoff, which holds for B = A / mu(A).
Matrix kleene_closure(const Matrix& b);

// Entries lying on some cycle of geometric mean mu, found through the
// closure of A / mu: (i, j) qualifies iff b_ij * (B*)_ji reaches 1.
std::vector<std::pair<int, int>> critical_entries(const Matrix& a, double mu,
                                                  const NumericPolicy& policy = {});

// Column of the closure of A / mu at the smallest critical node, rescaled so
// its maximum entry is exactly 1. Requires mu > 0.
Vector max_eigenvector(const Matrix& a, double mu,
                       const std::vector<int>& critical_nodes,
                       const NumericPolicy& policy = {});

// Exhaustive scan of all n! permutation patterns (n <= policy.jump_limit).
Eigenpair mu_jump(const Matrix& a, const NumericPolicy& policy = {});

// Maximum cycle mean in the log domain, per strongly connected component.
// Works for any n; reducible inputs are fine and get flagged.
Eigenpair mu_karp(const Matrix& a, const NumericPolicy& policy = {});

// Normalized power iteration with periodicity detection over a history
// window of length n*n. Requires irreducible A. Throws ConvergenceError
// (carrying the last iterate) when no period appears within max_iter steps.
Eigenpair mu_power(const Matrix& a, int max_iter = 1000, double tol = 1e-9,
                   const NumericPolicy& policy = {});

CriticalMatrix critical_matrix(const Matrix& a, const Eigenpair& pair,
                               const NumericPolicy& policy = {});

// When the diagonal product strictly beats every other jump product, the
// spectral value is just the largest diagonal entry; otherwise nullopt.
std::optional<double> diagonal_shortcut(const Matrix& a,
                                        const NumericPolicy& policy = {});

// True iff every jump that selects at least one nonzero entry has product
// below 1.
bool all_jumps_below_one(const Matrix& a, const NumericPolicy& policy = {});

// max_i |(A x)_i - mu x_i| / (mu * x_i), falling back to the largest entry
// of x as denominator scale where x_i = 0; 0 for an exact eigenpair.
double eigen_residual(const Matrix& a, double mu, const Vector& x);

}  // namespace maxeig
