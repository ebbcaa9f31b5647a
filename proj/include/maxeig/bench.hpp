#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxeig/policy.hpp"

namespace maxeig {

struct BenchRow {
  int n = 0;
  int trials = 0;
  std::string method;   // jump, jump_serial, karp, power
  double median_ms = 0.0;
  double agreement = 1.0;  // fraction of trials agreeing with karp
};

// Times each method on `trials` random irreducible matrices per size.
// Jump rows appear only for n within policy.jump_limit. Timings vary run to
// run; the agreement column is the reproducible part.
std::vector<BenchRow> run_bench(int n_lo, int n_hi, int trials, uint64_t seed,
                                const NumericPolicy& policy = {});

// Header plus one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace maxeig
