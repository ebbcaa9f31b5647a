#include "maxeig/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maxeig {

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

}  // namespace

Matrix random_irreducible(int n, double sparsity, std::mt19937_64& rng,
                          double lo, double hi) {
  Matrix a(n);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (u01(rng) >= sparsity) a(i, j) = log_uniform(rng, lo, hi);
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int t = 0; t < n; ++t) {
    int i = order[t], j = order[(t + 1) % n];
    if (a(i, j) == 0.0) a(i, j) = log_uniform(rng, lo, hi);
  }
  return a;
}

Vector random_weights(int n, std::mt19937_64& rng, double lo, double hi) {
  std::vector<double> w(n);
  for (double& v : w) v = log_uniform(rng, lo, hi);
  return Vector(std::move(w));
}

Matrix random_transitive(int n, std::mt19937_64& rng) {
  Vector w = random_weights(n, rng);
  Matrix b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = w[i] / w[j];
  }
  return b;
}

SRMatrix random_sr(int n, std::mt19937_64& rng, double spread) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      double v = log_uniform(rng, 1.0 / spread, spread);
      m(i, j) = v;
      m(j, i) = 1.0 / v;
    }
  }
  return unchecked_sr(std::move(m));
}

}  // namespace maxeig
