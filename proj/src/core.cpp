#include "maxeig/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxeig {

namespace {

void require_same_order(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": size mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

void check_scalar(double c) {
  if (!(c >= 0.0) || c != c) {
    throw std::invalid_argument("scalar_mul: scalar must be nonnegative");
  }
}

}  // namespace

Vector max_matvec(const Matrix& a, const Vector& v) {
  require_same_order(a.size(), v.size(), "max_matvec");
  const int n = a.size();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double best = 0.0;
    for (int j = 0; j < n; ++j) best = std::max(best, a(i, j) * v[j]);
    out[i] = best;
  }
  return Vector(std::move(out));
}

Matrix max_matmat(const Matrix& a, const Matrix& b) {
  require_same_order(a.size(), b.size(), "max_matmat");
  const int n = a.size();
  Matrix c(n);
#pragma omp parallel for schedule(static) if (n >= 64)
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        double v = aik * b(k, j);
        if (v > c(i, j)) c(i, j) = v;
      }
    }
  }
  return c;
}

Matrix oplus(const Matrix& a, const Matrix& b) {
  require_same_order(a.size(), b.size(), "oplus");
  const int n = a.size();
  Matrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = std::max(a(i, j), b(i, j));
  return c;
}

Vector oplus(const Vector& a, const Vector& b) {
  require_same_order(a.size(), b.size(), "oplus");
  std::vector<double> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return Vector(std::move(out));
}

Matrix scalar_mul(double c, const Matrix& a) {
  check_scalar(c);
  const int n = a.size();
  Matrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = c * a(i, j);
  return out;
}

Vector scalar_mul(double c, const Vector& v) {
  check_scalar(c);
  std::vector<double> out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return Vector(std::move(out));
}

std::vector<std::vector<int>> arc_adjacency(const Matrix& a,
                                            const NumericPolicy& policy) {
  const int n = a.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!policy.is_zero(a(i, j))) adj[i].push_back(j);
  return adj;
}

std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dfs_number(n, -1), dfs_min(n, -1), on_stack_pos(n, -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  // explicit stack of (node, next child index) to avoid deep recursion
  std::vector<std::pair<int, size_t>> call;
  for (int root = 0; root < n; ++root) {
    if (dfs_number[root] != -1) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child == 0) {
        dfs_number[v] = dfs_min[v] = counter++;
        on_stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
      }
      bool descended = false;
      while (child < adj[v].size()) {
        int w = adj[v][child++];
        if (dfs_number[w] == -1) {
          call.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack_pos[w] != -1) dfs_min[v] = std::min(dfs_min[v], dfs_number[w]);
      }
      if (descended) continue;
      if (dfs_min[v] == dfs_number[v]) {
        std::vector<int> comp(stack.begin() + on_stack_pos[v], stack.end());
        for (int w : comp) on_stack_pos[w] = -1;
        stack.resize(stack.size() - comp.size());
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        dfs_min[parent] = std::min(dfs_min[parent], dfs_min[finished]);
      }
    }
  }
  return components;
}

bool is_irreducible(const Matrix& a, const NumericPolicy& policy) {
  if (a.size() == 1) return true;
  return strongly_connected_components(arc_adjacency(a, policy)).size() == 1;
}

}  // namespace maxeig
