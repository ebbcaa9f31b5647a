#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxeig/matrix.hpp"
#include "maxeig/policy.hpp"
#include "maxeig/spectral.hpp"

namespace maxeig {

// Positive square matrix with a_ij * a_ji = 1 for all pairs (hence unit
// diagonal). Only obtainable through validate_sr.
class SRMatrix {
 public:
  const Matrix& matrix() const { return m_; }
  int size() const { return m_.size(); }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit SRMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
  friend SRMatrix validate_sr(const Matrix&, const NumericPolicy&);
  friend SRMatrix unchecked_sr(Matrix m);
};

struct SrViolation {
  enum Kind { NonPositive, Reciprocity } kind;
  int i, j;
  double value;  // the offending entry, or the product a_ij * a_ji
  std::string describe() const;
};

// Worst violation (largest |a_ij * a_ji - 1|, or first non-positive entry),
// nullopt when the matrix is symmetrically reciprocal within rel_tol.
std::optional<SrViolation> sr_violation(const Matrix& a,
                                        const NumericPolicy& policy = {});

// Certifying constructor; throws SrError carrying the worst pair.
SRMatrix validate_sr(const Matrix& a, const NumericPolicy& policy = {});

// For matrices reciprocal by construction (mirrored generators, single-entry
// rescaling); skips the certification pass.
SRMatrix unchecked_sr(Matrix m);

// True iff every jump with at least one fixed point has product 1 within
// rel_tol. Guaranteed only up to n = 3; longer cycles inside subordinate
// jumps can carry any product. n <= policy.jump_limit.
bool subordinate_jump_products(const SRMatrix& a,
                               const NumericPolicy& policy = {});

// True iff every jump product is 1, equivalently every directed triangle
// product a_ij * a_jk * a_ki is 1. Uses the jump route up to
// policy.jump_limit and the triangle route beyond it.
bool is_transitive(const SRMatrix& a, const NumericPolicy& policy = {});

struct WeightVector {
  Vector w;        // max eigenvector, largest entry exactly 1
  double error;    // relative_error(a, w), equals mu(a) - 1
  Matrix induced;  // b_ij = w_i / w_j
};

WeightVector weight_vector(const SRMatrix& a, const NumericPolicy& policy = {});

// max over (i, k) of |a_ik - w_i / w_k| / a_ik.
double relative_error(const SRMatrix& a, const Vector& w);

struct ErrorBoundDetail {
  double c;                 // the certificate: (max jump product)^(1/k) - 1
  double max_jump_product;
  int k;                    // nonzero entries of the achieving jump
  bool principal;           // whether that jump avoids the diagonal
};

ErrorBoundDetail error_bound_detail(const SRMatrix& a,
                                    const NumericPolicy& policy = {});
double error_bound(const SRMatrix& a, const NumericPolicy& policy = {});

// a_ij -> a_ij * tau and a_ji -> a_ji / tau for one designated off-diagonal
// entry: the first arc of the critical cycle in `pair`, or (0, 1) when that
// cycle is a self-loop or absent. Reciprocity is preserved exactly.
SRMatrix perturb_tau(const SRMatrix& a, const Eigenpair& pair, double tau,
                     const NumericPolicy& policy = {});

// Single-entry variant used directly by the ratio report.
SRMatrix scale_entry(const SRMatrix& a, int i, int j, double tau);

struct TauScan {
  int entry_i = 0, entry_j = 1;  // the rescaled entry
  std::vector<double> taus;  // geometric grid, tau_min..tau_max inclusive
  std::vector<double> mus;
  double tau1 = 0.0;  // first grid point attaining the sampled minimum
  double tau2 = 0.0;  // last grid point attaining it (valley may be flat)
  double mu0 = 0.0;   // sampled minimum
  int argmin = 0;
  bool unimodal = false;  // decreasing, then flat, then increasing
};

TauScan tau_scan(const SRMatrix& a, double tau_min, double tau_max, int steps,
                 const NumericPolicy& policy = {});

// Compares the eigenvectors x (at tau0) and y (at tau1 > tau0) of the matrix
// with entry (i, j) scaled. Which ordering of the ratios y_k / x_k is
// expected depends on how mu moved; the strict orderings are reported, not
// asserted, since they do not always hold.
struct RatioReport {
  double tau0, tau1;
  int entry_i, entry_j;
  double mu0, mu1;
  Vector x, y;
  std::vector<double> ratio;  // y_k / x_k
  enum Case { MuIncreased, MuDecreased, MuEqual } kind;
  // MuIncreased: ratio[i] strictly largest. MuDecreased: ratio[j] strictly
  // smallest. MuEqual: ratio[i] >= ratio[k] >= ratio[j] for all k.
  bool clause_holds;
  std::vector<int> violating_indices;
};

RatioReport eigenvector_ratio_report(const SRMatrix& a, double tau0,
                                     double tau1, int entry_i = 0,
                                     int entry_j = 1,
                                     const NumericPolicy& policy = {});

}  // namespace maxeig
