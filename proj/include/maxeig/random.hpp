#pragma once

#include <random>

#include "maxeig/ahp.hpp"
#include "maxeig/matrix.hpp"

namespace maxeig {

// Entries log-uniform in [lo, hi]; each off-cycle entry zeroed with
// probability `sparsity`. A full permutation cycle through all nodes is
// always kept nonzero, so the result is irreducible by construction.
Matrix random_irreducible(int n, double sparsity, std::mt19937_64& rng,
                          double lo = 0.1, double hi = 10.0);

// Positive weights, log-uniform in [lo, hi].
Vector random_weights(int n, std::mt19937_64& rng, double lo = 0.1,
                      double hi = 10.0);

// b_ij = w_i / w_j for random positive w: transitive by construction.
Matrix random_transitive(int n, std::mt19937_64& rng);

// Upper triangle log-uniform in [1/spread, spread], mirrored reciprocally,
// unit diagonal.
SRMatrix random_sr(int n, std::mt19937_64& rng, double spread = 9.0);

}  // namespace maxeig
