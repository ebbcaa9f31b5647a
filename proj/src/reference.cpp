#include "maxeig/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "maxeig/core.hpp"

namespace maxeig::reference {

Vector max_matvec(const Matrix& a, const Vector& v) {
  const int n = a.size();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double m = 0.0;
    for (int j = 0; j < n; ++j) m = std::max(m, a(i, j) * v[j]);
    out[i] = m;
  }
  return Vector(std::move(out));
}

Matrix max_matmat(const Matrix& a, const Matrix& b) {
  const int n = a.size();
  Matrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double m = 0.0;
      for (int k = 0; k < n; ++k) m = std::max(m, a(i, k) * b(k, j));
      c(i, j) = m;
    }
  }
  return c;
}

Matrix kleene_closure_powers(const Matrix& b) {
  const int n = b.size();
  Matrix c = Matrix::identity(n);
  Matrix p = b;
  for (int t = 1; t < n; ++t) {
    c = oplus(c, p);
    p = reference::max_matmat(p, b);
  }
  if (n == 1) c = oplus(c, b);  // the loop above never joins b itself
  return c;
}

JumpScanResult jump_mu_scan(const Matrix& a, const NumericPolicy& policy) {
  const int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(n, 0);
  double best = -1.0;
  do {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      double sum = 0.0, prod = 1.0;
      int len = 0;
      bool all_nonzero = true;
      int j = i;
      do {
        seen[j] = 1;
        double v = a(j, perm[j]);
        if (policy.is_zero(v)) {
          all_nonzero = false;
        } else if (policy.log_domain) {
          sum += std::log(v);
        } else {
          prod *= v;
        }
        ++len;
        j = perm[j];
      } while (j != i);
      if (!all_nonzero) continue;
      double mean = len == 1 ? a(i, perm[i])
                             : (policy.log_domain ? std::exp(sum / len)
                                                  : std::pow(prod, 1.0 / len));
      if (mean > best) best = mean;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  JumpScanResult out;
  out.has_cycle = best >= 0.0;
  out.mu = out.has_cycle ? best : 0.0;
  return out;
}

std::set<std::vector<int>> critical_cycles_by_jumps(const Matrix& a, double mu,
                                                    const NumericPolicy& policy) {
  const int n = a.size();
  std::set<std::vector<int>> found;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(n, 0);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    // visiting i in ascending order starts each cycle at its smallest node
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      double sum = 0.0;
      bool all_nonzero = true;
      int j = i;
      do {
        seen[j] = 1;
        cyc.push_back(j);
        double v = a(j, perm[j]);
        if (policy.is_zero(v)) {
          all_nonzero = false;
        } else {
          sum += std::log(v);
        }
        j = perm[j];
      } while (j != i);
      if (!all_nonzero) continue;
      double mean = cyc.size() == 1
                        ? a(i, perm[i])
                        : std::exp(sum / static_cast<double>(cyc.size()));
      if (policy.close(mean, mu)) found.insert(std::move(cyc));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace maxeig::reference
