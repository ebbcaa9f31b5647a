#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "maxeig/matrix.hpp"
#include "maxeig/policy.hpp"

namespace maxeig {

// One permutation pattern over the matrix: the selected entries are
// a_{i, sigma[i]}. Principal means the permutation has no fixed point, so no
// diagonal entry is selected.
struct Jump {
  std::vector<int> sigma;
  std::vector<std::vector<int>> cycles;  // each rotated smallest-node-first
  double p = 1.0;                        // product of the nonzero selected entries
  int s = 0;                             // how many selected entries are nonzero
  bool principal = false;
};

uint64_t factorial(int n);

// rank-th permutation of {0..n-1} in lexicographic order.
std::vector<int> unrank_permutation(uint64_t rank, int n);

// Calls fn once per permutation of {0..n-1}, lexicographic order.
void for_each_permutation(int n,
                          const std::function<void(const std::vector<int>&)>& fn);

Jump make_jump(const Matrix& a, const std::vector<int>& sigma,
               const NumericPolicy& policy = {});

// All n! jumps of A in lexicographic sigma order. Refuses n beyond
// policy.jump_limit since the count is factorial.
std::vector<Jump> enumerate_jumps(const Matrix& a,
                                  const NumericPolicy& policy = {});

struct JumpScanResult {
  double mu = 0.0;
  bool has_cycle = false;  // false when no permutation cycle is free of zeros
};

// Max geometric mean over all permutation cycles whose entries are all
// nonzero. The permutation space is split into disjoint rank ranges reduced
// independently (OpenMP) and merged by max, so the result does not depend on
// the partitioning.
JumpScanResult jump_mu_scan(const Matrix& a, const NumericPolicy& policy = {});

}  // namespace maxeig
