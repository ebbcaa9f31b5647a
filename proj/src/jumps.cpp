#include "maxeig/jumps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "maxeig/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maxeig {

namespace {

void check_order(int n, int limit, const char* what) {
  if (n > limit) {
    throw LimitError(std::string(what) + ": order " + std::to_string(n) +
                     " exceeds jump_limit " + std::to_string(limit) + " (" +
                     std::to_string(n) + "! permutations); raise the limit or " +
                     "use the karp method");
  }
  if (n > 20) {
    throw LimitError(std::string(what) + ": order " + std::to_string(n) +
                     " overflows the permutation rank type");
  }
}

}  // namespace

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

std::vector<int> unrank_permutation(uint64_t rank, int n) {
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    uint64_t f = factorial(n - 1 - i);
    auto k = static_cast<size_t>(rank / f);
    rank %= f;
    out[i] = avail[k];
    avail.erase(avail.begin() + static_cast<long>(k));
  }
  return out;
}

void for_each_permutation(
    int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

Jump make_jump(const Matrix& a, const std::vector<int>& sigma,
               const NumericPolicy& policy) {
  const int n = a.size();
  Jump jump;
  jump.sigma = sigma;
  jump.principal = true;
  jump.p = 1.0;
  jump.s = 0;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] == i) jump.principal = false;
    double v = a(i, sigma[i]);
    if (!policy.is_zero(v)) {
      ++jump.s;
      // at most n factors: the plain product is the accurate one here
      jump.p *= v;
    }
    if (seen[i]) continue;
    // new cycle; i is its smallest node since smaller ones are all seen
    std::vector<int> cycle;
    int j = i;
    do {
      seen[j] = 1;
      cycle.push_back(j);
      j = sigma[j];
    } while (j != i);
    jump.cycles.push_back(std::move(cycle));
  }
  return jump;
}

std::vector<Jump> enumerate_jumps(const Matrix& a,
                                  const NumericPolicy& policy) {
  const int n = a.size();
  check_order(n, policy.jump_limit, "enumerate_jumps");
  std::vector<Jump> jumps;
  jumps.reserve(static_cast<size_t>(factorial(n)));
  for_each_permutation(n, [&](const std::vector<int>& sigma) {
    jumps.push_back(make_jump(a, sigma, policy));
  });
  return jumps;
}

JumpScanResult jump_mu_scan(const Matrix& a, const NumericPolicy& policy) {
  const int n = a.size();
  check_order(n, policy.jump_limit, "jump_mu_scan");
  const uint64_t total = factorial(n);

  std::vector<double> lg(static_cast<size_t>(n) * n, 0.0);
  if (policy.log_domain) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!policy.is_zero(a(i, j)))
          lg[static_cast<size_t>(i) * n + j] = std::log(a(i, j));
  }

  int chunks = 1;
#ifdef _OPENMP
  chunks = static_cast<int>(
      std::min<uint64_t>(total, static_cast<uint64_t>(omp_get_max_threads()) * 8));
#endif
  // each chunk reduces its own rank range; merged afterwards, so the result
  // is independent of the partition
  std::vector<double> chunk_best(chunks, -1.0);

#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const uint64_t lo = total / chunks * c + std::min<uint64_t>(total % chunks, c);
    const uint64_t hi =
        total / chunks * (c + 1) + std::min<uint64_t>(total % chunks, c + 1);
    std::vector<int> perm = unrank_permutation(lo, n);
    std::vector<char> seen(n, 0);
    double local = -1.0;
    for (uint64_t r = lo; r < hi; ++r) {
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
            sum += lg[static_cast<size_t>(j) * n + perm[j]];
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
        if (mean > local) local = mean;
      }
      std::next_permutation(perm.begin(), perm.end());
    }
    chunk_best[c] = local;
  }

  JumpScanResult out;
  double best = -1.0;
  for (double b : chunk_best) best = std::max(best, b);
  out.has_cycle = best >= 0.0;
  out.mu = out.has_cycle ? best : 0.0;
  return out;
}

}  // namespace maxeig
