#pragma once

#include <set>
#include <vector>

#include "maxeig/jumps.hpp"
#include "maxeig/matrix.hpp"
#include "maxeig/policy.hpp"

// Plain serial implementations of the kernels that run under OpenMP in the
// main library. Kept deliberately simple; tests require the fast paths to
// reproduce these results exactly, and the bench target times both.
namespace maxeig::reference {

Vector max_matvec(const Matrix& a, const Vector& v);
Matrix max_matmat(const Matrix& a, const Matrix& b);

// Closure by its definition: I (+) B (+) B^2 (+) ... (+) B^(n-1).
Matrix kleene_closure_powers(const Matrix& b);

// Single next_permutation loop over all n! patterns.
JumpScanResult jump_mu_scan(const Matrix& a, const NumericPolicy& policy = {});

// Every distinct permutation cycle with all entries nonzero whose geometric
// mean reaches mu, in canonical node order. Serial permutation sweep.
std::set<std::vector<int>> critical_cycles_by_jumps(
    const Matrix& a, double mu, const NumericPolicy& policy = {});

}  // namespace maxeig::reference
