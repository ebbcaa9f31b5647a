#include "maxeig/ahp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "maxeig/errors.hpp"
#include "maxeig/jumps.hpp"

namespace maxeig {

namespace {

void check_jump_order(int n, const NumericPolicy& policy) {
  if (n > policy.jump_limit) {
    std::ostringstream os;
    os << "refusing to enumerate " << n << "! jumps (limit "
       << policy.jump_limit << "; raise jump_limit to override)";
    throw LimitError(os.str());
  }
}

// The perturbed entry: first arc of the critical cycle, unless that cycle is
// a self-loop or missing.
std::pair<int, int> designated_entry(const Eigenpair& pair) {
  const Cycle& c = pair.critical_cycle;
  if (c.length() >= 2) return {c.nodes[0], c.nodes[1]};
  return {0, 1};
}

}  // namespace

SRMatrix unchecked_sr(Matrix m) { return SRMatrix(std::move(m)); }

std::string SrViolation::describe() const {
  std::ostringstream os;
  if (kind == NonPositive) {
    os << "entry (" << i + 1 << ", " << j + 1 << ") is " << value
       << "; every entry must be positive";
  } else {
    os << "a(" << i + 1 << ", " << j + 1 << ") * a(" << j + 1 << ", " << i + 1
       << ") = " << value << ", expected 1";
  }
  return os.str();
}

std::optional<SrViolation> sr_violation(const Matrix& a,
                                        const NumericPolicy& policy) {
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) <= 0.0) {
        return SrViolation{SrViolation::NonPositive, i, j, a(i, j)};
      }
    }
  }
  double worst_dev = 0.0;
  SrViolation worst{SrViolation::Reciprocity, 0, 0, 1.0};
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {  // j = i checks the unit diagonal
      double prod = a(i, j) * a(j, i);
      double dev = std::fabs(prod - 1.0);
      if (dev > worst_dev) {
        worst_dev = dev;
        worst = SrViolation{SrViolation::Reciprocity, i, j, prod};
      }
    }
  }
  if (worst_dev > policy.rel_tol) return worst;
  return std::nullopt;
}

SRMatrix validate_sr(const Matrix& a, const NumericPolicy& policy) {
  if (auto v = sr_violation(a, policy)) {
    throw SrError(v->describe(), v->i, v->j, v->value);
  }
  return SRMatrix(a);
}

bool subordinate_jump_products(const SRMatrix& a, const NumericPolicy& policy) {
  const int n = a.size();
  check_jump_order(n, policy);
  bool ok = true;
  for_each_permutation(n, [&](const std::vector<int>& sigma) {
    if (!ok) return;
    bool fixed = false;
    for (int i = 0; i < n && !fixed; ++i) fixed = sigma[i] == i;
    if (!fixed) return;
    Jump j = make_jump(a.matrix(), sigma, policy);
    if (!policy.close(j.p, 1.0)) ok = false;
  });
  return ok;
}

bool is_transitive(const SRMatrix& a, const NumericPolicy& policy) {
  const int n = a.size();
  if (n <= policy.jump_limit) {
    bool ok = true;
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
      if (!ok) return;
      if (!policy.close(make_jump(a.matrix(), sigma, policy).p, 1.0)) ok = false;
    });
    return ok;
  }
  // every jump product is 1 exactly when every triangle product is; one
  // orientation per triple suffices since the reverse product is reciprocal
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!policy.close(a(i, j) * a(j, k) * a(k, i), 1.0)) return false;
      }
    }
  }
  return true;
}

WeightVector weight_vector(const SRMatrix& a, const NumericPolicy& policy) {
  Eigenpair ep = mu_karp(a.matrix(), policy);
  const int n = a.size();
  Matrix induced(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) induced(i, j) = ep.x[i] / ep.x[j];
  }
  return WeightVector{ep.x, relative_error(a, ep.x), std::move(induced)};
}

double relative_error(const SRMatrix& a, const Vector& w) {
  const int n = a.size();
  if (w.size() != n) {
    throw std::invalid_argument("relative_error: weight size mismatch");
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      worst = std::max(worst, std::fabs(a(i, k) - w[i] / w[k]) / a(i, k));
    }
  }
  return worst;
}

ErrorBoundDetail error_bound_detail(const SRMatrix& a,
                                    const NumericPolicy& policy) {
  check_jump_order(a.size(), policy);
  ErrorBoundDetail d{0.0, 0.0, 0, false};
  for_each_permutation(a.size(), [&](const std::vector<int>& sigma) {
    Jump j = make_jump(a.matrix(), sigma, policy);
    if (j.p > d.max_jump_product) {
      d.max_jump_product = j.p;
      d.k = j.s;
      d.principal = j.principal;
    }
  });
  // positive matrix, so the identity jump guarantees k = n and product >= 1
  d.c = d.k > 0 ? std::pow(d.max_jump_product, 1.0 / d.k) - 1.0 : 0.0;
  return d;
}

double error_bound(const SRMatrix& a, const NumericPolicy& policy) {
  return error_bound_detail(a, policy).c;
}

SRMatrix perturb_tau(const SRMatrix& a, const Eigenpair& pair, double tau,
                     const NumericPolicy& policy) {
  (void)policy;
  if (a.size() < 2) {
    throw std::invalid_argument("perturb_tau: need at least two nodes");
  }
  auto [i, j] = designated_entry(pair);
  return scale_entry(a, i, j, tau);
}

SRMatrix scale_entry(const SRMatrix& a, int i, int j, double tau) {
  const int n = a.size();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw std::invalid_argument("scale_entry: need a valid off-diagonal entry");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("scale_entry: tau must be positive and finite");
  }
  Matrix m = a.matrix();
  m(i, j) *= tau;
  m(j, i) /= tau;
  return unchecked_sr(std::move(m));
}

TauScan tau_scan(const SRMatrix& a, double tau_min, double tau_max, int steps,
                 const NumericPolicy& policy) {
  if (!(tau_min > 0.0) || !(tau_max > tau_min) || !std::isfinite(tau_max)) {
    throw std::invalid_argument("tau_scan: need 0 < tau_min < tau_max");
  }
  if (steps < 2) {
    throw std::invalid_argument("tau_scan: need at least two grid points");
  }
  if (a.size() < 2) {
    throw std::invalid_argument("tau_scan: need at least two nodes");
  }

  TauScan ts;
  ts.taus.resize(steps);
  ts.mus.resize(steps);
  const double span = tau_max / tau_min;
  for (int k = 0; k < steps; ++k) {
    ts.taus[k] = tau_min * std::pow(span, static_cast<double>(k) / (steps - 1));
  }
  ts.taus.front() = tau_min;
  ts.taus.back() = tau_max;

  const auto [ei, ej] = designated_entry(mu_karp(a.matrix(), policy));
  ts.entry_i = ei;
  ts.entry_j = ej;

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < steps; ++k) {
    ts.mus[k] = mu_karp(scale_entry(a, ei, ej, ts.taus[k]).matrix(), policy).mu;
  }

  int arg = 0;
  for (int k = 1; k < steps; ++k) {
    if (ts.mus[k] < ts.mus[arg]) arg = k;
  }
  ts.argmin = arg;
  ts.mu0 = ts.mus[arg];
  int p0 = arg, p1 = arg;
  while (p0 > 0 && policy.close(ts.mus[p0 - 1], ts.mu0)) --p0;
  while (p1 + 1 < steps && policy.close(ts.mus[p1 + 1], ts.mu0)) ++p1;
  ts.tau1 = ts.taus[p0];
  ts.tau2 = ts.taus[p1];

  bool uni = true;
  for (int k = 0; k < p0; ++k) {
    if (ts.mus[k] < ts.mus[k + 1] && !policy.close(ts.mus[k], ts.mus[k + 1])) {
      uni = false;
    }
  }
  for (int k = p1; k + 1 < steps; ++k) {
    if (ts.mus[k] > ts.mus[k + 1] && !policy.close(ts.mus[k], ts.mus[k + 1])) {
      uni = false;
    }
  }
  ts.unimodal = uni;
  return ts;
}

RatioReport eigenvector_ratio_report(const SRMatrix& a, double tau0,
                                     double tau1, int entry_i, int entry_j,
                                     const NumericPolicy& policy) {
  const int n = a.size();
  if (!(tau0 > 0.0) || !(tau1 > tau0) || !std::isfinite(tau1)) {
    throw std::invalid_argument(
        "eigenvector_ratio_report: need 0 < tau0 < tau1");
  }
  if (entry_i < 0 || entry_j < 0 || entry_i >= n || entry_j >= n ||
      entry_i == entry_j) {
    throw std::invalid_argument(
        "eigenvector_ratio_report: need a valid off-diagonal entry");
  }

  Eigenpair e0 = mu_karp(scale_entry(a, entry_i, entry_j, tau0).matrix(), policy);
  Eigenpair e1 = mu_karp(scale_entry(a, entry_i, entry_j, tau1).matrix(), policy);

  RatioReport r{tau0,  tau1,  entry_i, entry_j,
                e0.mu, e1.mu, e0.x,    e1.x,
                {},    RatioReport::MuEqual, true, {}};
  r.ratio.resize(n);
  for (int k = 0; k < n; ++k) r.ratio[k] = e1.x[k] / e0.x[k];

  if (policy.close(e0.mu, e1.mu)) {
    r.kind = RatioReport::MuEqual;
  } else if (e1.mu > e0.mu) {
    r.kind = RatioReport::MuIncreased;
  } else {
    r.kind = RatioReport::MuDecreased;
  }

  const double ri = r.ratio[entry_i];
  const double rj = r.ratio[entry_j];
  for (int k = 0; k < n; ++k) {
    bool bad = false;
    switch (r.kind) {
      case RatioReport::MuIncreased:
        bad = k != entry_i && r.ratio[k] >= ri;
        break;
      case RatioReport::MuDecreased:
        bad = k != entry_j && r.ratio[k] <= rj;
        break;
      case RatioReport::MuEqual:
        bad = (r.ratio[k] > ri && !policy.close(r.ratio[k], ri)) ||
              (r.ratio[k] < rj && !policy.close(r.ratio[k], rj));
        break;
    }
    if (bad) r.violating_indices.push_back(k);
  }
  r.clause_holds = r.violating_indices.empty();
  return r;
}

}  // namespace maxeig
