#include "maxeig/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "maxeig/errors.hpp"
#include "maxeig/random.hpp"
#include "maxeig/reference.hpp"
#include "maxeig/spectral.hpp"

namespace maxeig {

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <typename F>
double time_ms(const F& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

std::vector<BenchRow> run_bench(int n_lo, int n_hi, int trials, uint64_t seed,
                                const NumericPolicy& policy) {
  if (n_lo < 1 || n_hi < n_lo) {
    throw std::invalid_argument("run_bench: need 1 <= n_lo <= n_hi");
  }
  if (trials < 0) throw std::invalid_argument("run_bench: negative trials");
  std::vector<BenchRow> rows;
  if (trials == 0) return rows;

  std::mt19937_64 rng(seed);
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<Matrix> mats;
    mats.reserve(trials);
    for (int t = 0; t < trials; ++t) {
      mats.push_back(random_irreducible(n, 0.3, rng));
    }

    std::vector<double> baseline(trials);
    std::vector<double> ms(trials);
    for (int t = 0; t < trials; ++t) {
      ms[t] = time_ms([&] { baseline[t] = mu_karp(mats[t], policy).mu; });
    }
    rows.push_back({n, trials, "karp", median(ms), 1.0});

    if (n <= policy.jump_limit) {
      int agree = 0;
      for (int t = 0; t < trials; ++t) {
        double mu = 0.0;
        ms[t] = time_ms([&] { mu = jump_mu_scan(mats[t], policy).mu; });
        if (policy.close(mu, baseline[t])) ++agree;
      }
      rows.push_back({n, trials, "jump", median(ms),
                      static_cast<double>(agree) / trials});

      agree = 0;
      for (int t = 0; t < trials; ++t) {
        double mu = 0.0;
        ms[t] = time_ms([&] { mu = reference::jump_mu_scan(mats[t], policy).mu; });
        if (policy.close(mu, baseline[t])) ++agree;
      }
      rows.push_back({n, trials, "jump_serial", median(ms),
                      static_cast<double>(agree) / trials});
    }

    int agree = 0;
    for (int t = 0; t < trials; ++t) {
      double mu = -1.0;
      ms[t] = time_ms([&] {
        try {
          mu = mu_power(mats[t], 20000, 1e-12, policy).mu;
        } catch (const ConvergenceError&) {
          mu = -1.0;  // counts as a disagreement below
        }
      });
      if (mu >= 0.0 && policy.close(mu, baseline[t])) ++agree;
    }
    rows.push_back({n, trials, "power", median(ms),
                    static_cast<double>(agree) / trials});
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n,trials,method,median_ms,agreement\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.trials << ',' << r.method << ',' << std::fixed
       << std::setprecision(4) << r.median_ms << ',' << std::setprecision(3)
       << r.agreement << '\n';
  }
  return os.str();
}

}  // namespace maxeig
