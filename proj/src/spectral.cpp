#include "maxeig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "maxeig/core.hpp"
#include "maxeig/errors.hpp"
#include "maxeig/jumps.hpp"

namespace maxeig {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double cycle_mean_from_entries(const Matrix& a, const std::vector<int>& nodes,
                               const NumericPolicy& policy) {
  const int len = static_cast<int>(nodes.size());
  if (len == 1) return a(nodes[0], nodes[0]);
  if (policy.log_domain) {
    double sum = 0.0;
    for (int t = 0; t < len; ++t)
      sum += std::log(a(nodes[t], nodes[(t + 1) % len]));
    return std::exp(sum / len);
  }
  double prod = 1.0;
  for (int t = 0; t < len; ++t) prod *= a(nodes[t], nodes[(t + 1) % len]);
  return std::pow(prod, 1.0 / len);
}

Cycle make_cycle(const Matrix& a, std::vector<int> nodes,
                 const NumericPolicy& policy) {
  Cycle c;
  // rotate the smallest node to the front
  auto it = std::min_element(nodes.begin(), nodes.end());
  std::rotate(nodes.begin(), it, nodes.end());
  c.geo_mean = cycle_mean_from_entries(a, nodes, policy);
  double w = 1.0;
  for (size_t t = 0; t < nodes.size(); ++t)
    w *= a(nodes[t], nodes[(t + 1) % nodes.size()]);
  c.weight = w;
  c.nodes = std::move(nodes);
  return c;
}

std::vector<std::pair<int, int>> critical_entries_from_closure(
    const Matrix& a, double mu, const Matrix& closure,
    const NumericPolicy& policy) {
  const int n = a.size();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (policy.is_zero(a(i, j))) continue;
      double v = (a(i, j) / mu) * closure(j, i);
      if (v >= 1.0 - policy.rel_tol) out.emplace_back(i, j);
    }
  }
  return out;
}

// Lexicographically smallest elementary cycle whose arcs are all critical.
// DFS tries successors in ascending order and closing back to the start is
// always the first branch, so the first cycle found is the smallest one.
// Every cycle of critical arcs has geometric mean mu, so the greedy fallback
// below is also valid if the search budget runs out.
std::vector<int> lex_min_cycle(int n,
                               const std::vector<std::pair<int, int>>& entries) {
  std::vector<std::vector<int>> cadj(n);
  for (auto [i, j] : entries) cadj[i].push_back(j);
  for (auto& row : cadj) std::sort(row.begin(), row.end());
  int m = n;
  for (auto [i, j] : entries) m = std::min(m, std::min(i, j));
  if (m == n) return {};

  std::vector<int> path{m};
  std::vector<char> on_path(n, 0);
  on_path[m] = 1;
  long budget = 1 << 20;

  // returns true once a cycle through m is closed
  auto dfs = [&](auto&& self, int u) -> bool {
    if (--budget < 0) return false;
    for (int v : cadj[u]) {
      if (v == m) return true;
      if (on_path[v]) continue;
      on_path[v] = 1;
      path.push_back(v);
      if (self(self, v)) return true;
      path.pop_back();
      on_path[v] = 0;
    }
    return false;
  };
  if (dfs(dfs, m)) return path;

  // budget exhausted: walk smallest successors until a node repeats
  std::vector<int> walk{m};
  std::vector<int> pos(n, -1);
  pos[m] = 0;
  int u = m;
  for (;;) {
    int v = cadj[u].front();
    if (pos[v] != -1) {
      return {walk.begin() + pos[v], walk.end()};
    }
    pos[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    u = v;
  }
}

struct ClosureParts {
  Matrix closure;
  std::vector<std::pair<int, int>> entries;
  std::vector<int> nodes;
};

ClosureParts critical_parts(const Matrix& a, double mu,
                            const NumericPolicy& policy) {
  ClosureParts parts{kleene_closure(scalar_mul(1.0 / mu, a)), {}, {}};
  parts.entries = critical_entries_from_closure(a, mu, parts.closure, policy);
  std::vector<char> mark(a.size(), 0);
  for (auto [i, j] : parts.entries) mark[i] = mark[j] = 1;
  for (int i = 0; i < a.size(); ++i)
    if (mark[i]) parts.nodes.push_back(i);
  return parts;
}

Vector eigenvector_from_closure(const Matrix& closure, int critical_node) {
  const int n = closure.size();
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = closure(i, critical_node);
  double m = *std::max_element(x.begin(), x.end());
  for (double& v : x) v /= m;  // the argmax entry divides to exactly 1
  return Vector(std::move(x));
}

Eigenpair finish_eigenpair(const Matrix& a, double mu, bool has_cycle,
                           Method method, const NumericPolicy& policy) {
  Eigenpair ep;
  ep.mu = mu;
  ep.method = method;
  ep.has_cycle = has_cycle;
  ep.irreducible = is_irreducible(a, policy);
  if (!has_cycle || mu <= 0.0) {
    ep.mu = 0.0;
    ep.has_cycle = false;
    return ep;
  }
  ClosureParts parts = critical_parts(a, mu, policy);
  ep.critical_nodes = parts.nodes;
  std::vector<int> cyc = lex_min_cycle(a.size(), parts.entries);
  if (!cyc.empty()) ep.critical_cycle = make_cycle(a, std::move(cyc), policy);
  ep.x = eigenvector_from_closure(parts.closure, ep.critical_nodes.front());
  return ep;
}

}  // namespace

Matrix kleene_closure(const Matrix& b) {
  const int n = b.size();
  Matrix c = b;
  for (int k = 0; k < n; ++k) {
    // row k first and serially: afterwards the other rows only read it
    {
      const double ckk = c(k, k);
      if (ckk > 0.0) {
        for (int j = 0; j < n; ++j) {
          double v = ckk * c(k, j);
          if (v > c(k, j)) c(k, j) = v;
        }
      }
    }
#pragma omp parallel for schedule(static) if (n >= 64)
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const double cik = c(i, k);
      if (cik == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        double v = cik * c(k, j);
        if (v > c(i, j)) c(i, j) = v;
      }
    }
  }
  for (int i = 0; i < n; ++i) c(i, i) = std::max(c(i, i), 1.0);
  return c;
}

std::vector<std::pair<int, int>> critical_entries(const Matrix& a, double mu,
                                                  const NumericPolicy& policy) {
  if (mu <= 0.0) return {};
  Matrix closure = kleene_closure(scalar_mul(1.0 / mu, a));
  return critical_entries_from_closure(a, mu, closure, policy);
}

Vector max_eigenvector(const Matrix& a, double mu,
                       const std::vector<int>& critical_nodes,
                       const NumericPolicy& policy) {
  if (mu <= 0.0) {
    throw std::invalid_argument("max_eigenvector: spectral value must be positive");
  }
  if (critical_nodes.empty()) {
    throw std::invalid_argument("max_eigenvector: no critical node supplied");
  }
  Matrix closure = kleene_closure(scalar_mul(1.0 / mu, a));
  Vector x = eigenvector_from_closure(
      closure, *std::min_element(critical_nodes.begin(), critical_nodes.end()));
  double res = eigen_residual(a, mu, x);
  if (res > std::sqrt(policy.rel_tol)) {
    throw std::runtime_error(
        "max_eigenvector: residual " + std::to_string(res) +
        " suggests the supplied value is not the spectral value");
  }
  return x;
}

Eigenpair mu_jump(const Matrix& a, const NumericPolicy& policy) {
  JumpScanResult scan = jump_mu_scan(a, policy);
  return finish_eigenpair(a, scan.mu, scan.has_cycle, Method::Jump, policy);
}

Eigenpair mu_karp(const Matrix& a, const NumericPolicy& policy) {
  const int n = a.size();
  const auto adj = arc_adjacency(a, policy);
  double best = -1.0;

  for (const auto& comp : strongly_connected_components(adj)) {
    const int s = static_cast<int>(comp.size());
    if (s == 1) {
      const int v = comp[0];
      if (!policy.is_zero(a(v, v))) best = std::max(best, a(v, v));
      continue;
    }
    std::vector<int> local(n, -1);
    for (int t = 0; t < s; ++t) local[comp[t]] = t;

    // arcs inside the component, log weights
    std::vector<std::vector<std::pair<int, double>>> in_arcs(s);
    for (int u : comp) {
      for (int w : adj[u]) {
        if (local[w] != -1) {
          in_arcs[local[w]].emplace_back(local[u], std::log(a(u, w)));
        }
      }
    }

    // D[k][v] = best log weight of a walk with exactly k arcs from comp[0]
    std::vector<std::vector<double>> d(
        s + 1, std::vector<double>(s, kNegInf));
    d[0][0] = 0.0;
    for (int k = 1; k <= s; ++k) {
      for (int v = 0; v < s; ++v) {
        double m = kNegInf;
        for (auto [u, w] : in_arcs[v]) {
          if (d[k - 1][u] > kNegInf) m = std::max(m, d[k - 1][u] + w);
        }
        d[k][v] = m;
      }
    }
    double lambda = kNegInf;
    for (int v = 0; v < s; ++v) {
      if (d[s][v] == kNegInf) continue;
      double inner = std::numeric_limits<double>::infinity();
      for (int k = 0; k < s; ++k) {
        if (d[k][v] == kNegInf) continue;
        inner = std::min(inner, (d[s][v] - d[k][v]) / (s - k));
      }
      lambda = std::max(lambda, inner);
    }
    if (lambda > kNegInf) best = std::max(best, std::exp(lambda));
  }

  return finish_eigenpair(a, best < 0.0 ? 0.0 : best, best >= 0.0,
                          Method::Karp, policy);
}

Eigenpair mu_power(const Matrix& a, int max_iter, double tol,
                   const NumericPolicy& policy) {
  const int n = a.size();
  if (n == 1) {
    return finish_eigenpair(a, a(0, 0), !policy.is_zero(a(0, 0)),
                            Method::Power, policy);
  }
  if (!is_irreducible(a, policy)) {
    throw std::invalid_argument("mu_power: matrix must be irreducible");
  }

  const size_t window = static_cast<size_t>(n) * static_cast<size_t>(n);
  std::deque<std::vector<double>> history;
  std::deque<double> cum_log;  // cumulative log of the normalization factors
  std::deque<int> steps;

  std::vector<double> x(n, 1.0);
  double cum = 0.0;
  history.push_back(x);
  cum_log.push_back(0.0);
  steps.push_back(0);

  for (int k = 1; k <= max_iter; ++k) {
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
      double m = 0.0;
      for (int j = 0; j < n; ++j) m = std::max(m, a(i, j) * x[j]);
      y[i] = m;
    }
    double c = *std::max_element(y.begin(), y.end());
    // irreducible, so every row has an arc and c stays positive
    for (double& v : y) v /= c;
    cum += std::log(c);

    for (size_t h = history.size(); h-- > 0;) {
      const auto& old = history[h];
      bool match = true;
      for (int i = 0; i < n && match; ++i) {
        double diff = std::fabs(y[i] - old[i]);
        if (diff > tol * std::max({y[i], old[i], 1e-300})) match = false;
      }
      if (match) {
        int period = k - steps[h];
        double mu = std::exp((cum - cum_log[h]) / period);
        return finish_eigenpair(a, mu, true, Method::Power, policy);
      }
    }

    history.push_back(y);
    cum_log.push_back(cum);
    steps.push_back(k);
    if (history.size() > window) {
      history.pop_front();
      cum_log.pop_front();
      steps.pop_front();
    }
    x = std::move(y);
  }
  throw ConvergenceError("mu_power: no period detected within " +
                             std::to_string(max_iter) + " iterations",
                         x);
}

CriticalMatrix critical_matrix(const Matrix& a, const Eigenpair& pair,
                               const NumericPolicy& policy) {
  CriticalMatrix cm{a, Matrix(a.size())};
  if (!pair.has_cycle || pair.mu <= 0.0) return cm;
  for (auto [i, j] : critical_entries(a, pair.mu, policy)) {
    cm.entries(i, j) = a(i, j);
  }
  return cm;
}

std::optional<double> diagonal_shortcut(const Matrix& a,
                                        const NumericPolicy& policy) {
  const int n = a.size();
  double diag_prod = 1.0, diag_max = 0.0;
  bool diag_all_nonzero = true;
  for (int i = 0; i < n; ++i) {
    double v = a(i, i);
    diag_max = std::max(diag_max, v);
    if (policy.is_zero(v)) {
      diag_all_nonzero = false;
    } else {
      diag_prod *= v;
    }
  }
  if (!diag_all_nonzero) return std::nullopt;  // product 0 can never dominate

  double max_other = kNegInf;
  bool identity = true;  // skip the diagonal jump itself
  for (const Jump& j : enumerate_jumps(a, policy)) {
    if (identity) {  // lexicographically first permutation is the identity
      identity = false;
      continue;
    }
    max_other = std::max(max_other, j.p);
  }
  if (diag_prod > max_other) return diag_max;
  return std::nullopt;
}

bool all_jumps_below_one(const Matrix& a, const NumericPolicy& policy) {
  for (const Jump& j : enumerate_jumps(a, policy)) {
    if (j.s >= 1 && j.p >= 1.0) return false;
  }
  return true;
}

double eigen_residual(const Matrix& a, double mu, const Vector& x) {
  if (mu <= 0.0 || x.empty()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  Vector ax = max_matvec(a, x);
  double xmax = x.max();
  double worst = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    double denom = mu * (x[i] > 0.0 ? x[i] : xmax);
    worst = std::max(worst, std::fabs(ax[i] - mu * x[i]) / denom);
  }
  return worst;
}

}  // namespace maxeig
