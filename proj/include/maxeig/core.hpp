#pragma once

#include <vector>

#include "maxeig/matrix.hpp"
#include "maxeig/policy.hpp"

namespace maxeig {

// (A (x) v)_i = max_j a_ij * v_j
Vector max_matvec(const Matrix& a, const Vector& v);

// (A (x) B)_ij = max_k a_ik * b_kj
Matrix max_matmat(const Matrix& a, const Matrix& b);

// Entrywise max: the semiring addition.
Matrix oplus(const Matrix& a, const Matrix& b);
Vector oplus(const Vector& a, const Vector& b);

// Entrywise scaling by a nonnegative constant.
Matrix scalar_mul(double c, const Matrix& a);
Vector scalar_mul(double c, const Vector& v);

// Adjacency lists of the weighted digraph: arc i -> j iff a_ij is nonzero.
std::vector<std::vector<int>> arc_adjacency(const Matrix& a,
                                            const NumericPolicy& policy = {});

// Tarjan, iterative. Components come out in reverse topological order.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj);

// True iff the digraph of A is strongly connected. A 1x1 matrix counts as
// irreducible regardless of its single entry.
bool is_irreducible(const Matrix& a, const NumericPolicy& policy = {});

}  // namespace maxeig
