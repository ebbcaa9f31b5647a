#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "maxeig/core.hpp"
#include "maxeig/errors.hpp"
#include "maxeig/random.hpp"
#include "maxeig/reference.hpp"
#include "maxeig/spectral.hpp"
#include "oracles.hpp"

using namespace maxeig;

namespace {

void check_eigenpair(const Matrix& a, const Eigenpair& ep, double tol = 1e-9) {
  REQUIRE(ep.has_cycle);
  REQUIRE(ep.mu > 0.0);
  CHECK(eigen_residual(a, ep.mu, ep.x) <= tol);
  CHECK(ep.x.max() == 1.0);
  REQUIRE_FALSE(ep.critical_cycle.empty());
  // the reported cycle really has geometric mean mu
  CHECK(oracle::cycle_geo_mean(a, ep.critical_cycle.nodes) ==
        doctest::Approx(ep.mu).epsilon(1e-9));
  for (int v : ep.critical_cycle.nodes) {
    CHECK(std::find(ep.critical_nodes.begin(), ep.critical_nodes.end(), v) !=
          ep.critical_nodes.end());
  }
}

}  // namespace

TEST_CASE("two competing cycles, the short strong one wins") {
  // the 2-cycle 8*3 = 24 beats the triangle (8*2*4)^(1/3) = 4 and every loop
  Matrix a{{0, 8, 1}, {3, 0, 2}, {4, 1, 1}};
  const double root24 = std::sqrt(24.0);

  for (const Eigenpair& ep :
       {mu_jump(a), mu_karp(a), mu_power(a, 1000, 1e-12)}) {
    CHECK(ep.mu == doctest::Approx(root24).epsilon(1e-12));
    CHECK(ep.critical_cycle.nodes == std::vector<int>{0, 1});
    CHECK(ep.critical_cycle.weight == doctest::Approx(24.0).epsilon(1e-12));
    CHECK(ep.critical_nodes == std::vector<int>{0, 1});
    REQUIRE(ep.x.size() == 3);
    CHECK(ep.x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ep.x[1] == doctest::Approx(std::sqrt(0.375)).epsilon(1e-12));
    CHECK(ep.x[2] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    check_eigenpair(a, ep, 1e-12);
  }

  CriticalMatrix cm = critical_matrix(a, mu_karp(a));
  CHECK(cm.base == a);
  CHECK(cm.entries == Matrix{{0, 8, 0}, {3, 0, 0}, {0, 0, 0}});
}

TEST_CASE("a zero-broken 3-cycle cannot carry the spectral value") {
  Matrix a{{0, 9, 0}, {1, 0, 0}, {0, 0, 2}};
  CHECK(mu_jump(a).mu == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(mu_karp(a).mu == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_FALSE(mu_karp(a).irreducible);
}

TEST_CASE("methods agree with the cycle-enumeration oracle") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + trial % 6;
    Matrix a = random_irreducible(n, 0.5 * u(rng), rng);
    oracle::MuOracle want = oracle::mu_by_cycles(a);
    REQUIRE(want.has_cycle);

    Eigenpair ja = mu_jump(a);
    Eigenpair ka = mu_karp(a);
    Eigenpair pa = mu_power(a, 20000, 1e-12);
    CHECK(ja.mu == doctest::Approx(want.mu).epsilon(1e-9));
    CHECK(ka.mu == doctest::Approx(want.mu).epsilon(1e-9));
    CHECK(pa.mu == doctest::Approx(want.mu).epsilon(1e-9));
    check_eigenpair(a, ja);
    check_eigenpair(a, ka);
    check_eigenpair(a, pa);
  }
}

TEST_CASE("reducible matrices: karp and jump handle them, power refuses") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int cyclic_seen = 0;

  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Matrix a(n);
    double density = 0.5 * u(rng);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (u(rng) < density) a(i, j) = std::exp(2.0 * u(rng) - 1.0);
      }
    }
    oracle::MuOracle want = oracle::mu_by_cycles(a);
    Eigenpair ka = mu_karp(a);
    CHECK(ka.has_cycle == want.has_cycle);
    if (n <= 7) {
      Eigenpair ja = mu_jump(a);
      CHECK(ja.has_cycle == want.has_cycle);
      if (want.has_cycle) CHECK(ja.mu == doctest::Approx(want.mu).epsilon(1e-9));
    }
    if (want.has_cycle) {
      ++cyclic_seen;
      CHECK(ka.mu == doctest::Approx(want.mu).epsilon(1e-9));
      check_eigenpair(a, ka);  // closure column works without irreducibility
    } else {
      CHECK(ka.mu == 0.0);
      CHECK(ka.x.empty());
    }
  }
  CHECK(cyclic_seen > 30);

  CHECK_THROWS_AS(mu_power(Matrix{{1, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("acyclic input is flagged, not faked") {
  Matrix a{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}};
  Eigenpair ep = mu_karp(a);
  CHECK_FALSE(ep.has_cycle);
  CHECK(ep.mu == 0.0);
  CHECK(ep.x.empty());
  CHECK(mu_jump(a).has_cycle == false);
  CriticalMatrix cm = critical_matrix(a, ep);
  CHECK(cm.entries == Matrix(3));
}

TEST_CASE("loop against longer cycle, and a zero inside the eigenvector") {
  Matrix tie{{2, 2}, {2, 0}};
  Eigenpair ep = mu_karp(tie);
  CHECK(ep.mu == doctest::Approx(2.0).epsilon(1e-12));
  // both the loop and the 2-cycle are critical
  auto entries = critical_entries(tie, ep.mu);
  std::set<std::pair<int, int>> got(entries.begin(), entries.end());
  CHECK(got == std::set<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(ep.critical_cycle.nodes == std::vector<int>{0});  // lex-smallest
  CHECK(ep.x[0] == 1.0);
  CHECK(ep.x[1] == doctest::Approx(1.0).epsilon(1e-12));

  Matrix diag = Matrix::diagonal(Vector{5, 3});
  Eigenpair dp = mu_karp(diag);
  CHECK(dp.mu == 5.0);
  CHECK(dp.critical_cycle.nodes == std::vector<int>{0});
  REQUIRE(dp.x.size() == 2);
  CHECK(dp.x[0] == 1.0);
  CHECK(dp.x[1] == 0.0);  // node 1 has no path to the critical node
  CHECK(eigen_residual(diag, 5.0, dp.x) == 0.0);
}

TEST_CASE("spectral value is scale equivariant and transpose invariant") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 5;
    Matrix a = random_irreducible(n, 0.4, rng);
    double mu = mu_karp(a).mu;

    Matrix b = scalar_mul(3.5, a);
    CHECK(mu_karp(b).mu == doctest::Approx(3.5 * mu).epsilon(1e-12));

    Matrix t(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) t(i, j) = a(j, i);
    }
    CHECK(mu_karp(t).mu == doctest::Approx(mu).epsilon(1e-12));

    // relabeling the nodes by a rotation
    auto p = [n](int v) { return (v + 1) % n; };
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r(p(i), p(j)) = a(i, j);
    }
    CHECK(mu_karp(r).mu == doctest::Approx(mu).epsilon(1e-12));
  }
}

TEST_CASE("closure: elimination order agrees with the power-sum definition") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Matrix a = random_irreducible(n, 0.5, rng);
    Matrix b = scalar_mul(1.0 / mu_karp(a).mu, a);
    Matrix fast = kleene_closure(b);
    Matrix slow = reference::kleene_closure_powers(b);
    REQUIRE(fast.size() == slow.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(fast(i, j) ==
              doctest::Approx(slow(i, j)).epsilon(1e-12).scale(1.0));
      }
    }
    // closing again changes nothing beyond roundoff
    Matrix twice = kleene_closure(fast);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(twice(i, j) ==
              doctest::Approx(fast(i, j)).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("critical entries are exactly the arcs of the critical cycles") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 5;
    Matrix a = random_irreducible(n, 0.4, rng);
    double mu = mu_karp(a).mu;

    std::set<std::vector<int>> cycles = reference::critical_cycles_by_jumps(a, mu);
    REQUIRE_FALSE(cycles.empty());
    std::set<std::pair<int, int>> arcs;
    for (const auto& c : cycles) {
      for (size_t t = 0; t < c.size(); ++t) {
        arcs.emplace(c[t], c[(t + 1) % c.size()]);
      }
    }
    auto entries = critical_entries(a, mu);
    std::set<std::pair<int, int>> got(entries.begin(), entries.end());
    CHECK(got == arcs);

    // the reported cycle is the lexicographically smallest critical one
    Eigenpair ep = mu_karp(a);
    CHECK(ep.critical_cycle.nodes == *cycles.begin());
  }
}

TEST_CASE("critical cycles found by jumps match the pure cycle oracle") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 5;
    Matrix a = random_irreducible(n, 0.3, rng);
    double mu = mu_karp(a).mu;
    CHECK(reference::critical_cycles_by_jumps(a, mu) ==
          oracle::critical_cycles(a, mu));
  }
}

TEST_CASE("diagonal shortcut fires only on strict dominance") {
  CHECK(diagonal_shortcut(Matrix::diagonal(Vector{5, 3})) == 5.0);
  CHECK(diagonal_shortcut(Matrix{{2, 1}, {1, 1}}) == 2.0);
  // diagonal product 1 does not beat the off-diagonal 2-cycle product 9
  CHECK_FALSE(diagonal_shortcut(Matrix{{1, 3}, {3, 1}}).has_value());
  // 4 < 9: shortcut declines even though the diagonal holds the max entry...
  CHECK_FALSE(diagonal_shortcut(Matrix{{2, 3}, {3, 2}}).has_value());
  // ...and when it fires, it really is the spectral value
  Matrix a{{2, 1}, {1, 1}};
  CHECK(*diagonal_shortcut(a) == doctest::Approx(mu_karp(a).mu).epsilon(1e-12));
  CHECK_FALSE(diagonal_shortcut(Matrix{{0, 1}, {1, 2}}).has_value());
}

TEST_CASE("jump products below one do not pin the spectral value to below one") {
  // agreeing case first
  Matrix small{{0.5, 0.1}, {0.1, 0.5}};
  CHECK(all_jumps_below_one(small));
  CHECK(mu_karp(small).mu < 1.0);

  // every jump product stays below 1, yet mu = sqrt(1.2) > 1: the strong
  // 2-cycle is always diluted by the tiny third-row selections
  Matrix diluted{{0, 2, 0.001}, {0.6, 0, 0.001}, {0.001, 0.001, 0.01}};
  CHECK(all_jumps_below_one(diluted));
  CHECK(mu_karp(diluted).mu == doctest::Approx(std::sqrt(1.2)).epsilon(1e-12));

  // acyclic, so mu = 0 < 1, yet a zero-broken pattern carries 2 * 0.9 >= 1
  Matrix broken{{0, 2, 0}, {0, 0, 0.9}, {0, 0, 0}};
  CHECK_FALSE(all_jumps_below_one(broken));
  CHECK_FALSE(mu_karp(broken).has_cycle);
}

TEST_CASE("power iteration details") {
  // period 2: normalized iterates alternate and the growth factors give 4
  Matrix a{{0, 2}, {8, 0}};
  Eigenpair ep = mu_power(a, 100, 1e-12);
  CHECK(ep.mu == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(ep.method == Method::Power);

  try {
    mu_power(a, 1, 1e-12);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    REQUIRE(e.last_iterate.size() == 2);
    CHECK(e.last_iterate[0] == 0.25);
    CHECK(e.last_iterate[1] == 1.0);
  }

  Eigenpair one = mu_power(Matrix{{0.0}});
  CHECK_FALSE(one.has_cycle);
  CHECK(mu_power(Matrix{{2.5}}).mu == 2.5);
}

TEST_CASE("eigenvector extraction rejects a wrong spectral value") {
  Matrix a{{0, 8, 1}, {3, 0, 2}, {4, 1, 1}};
  Eigenpair ep = mu_karp(a);
  CHECK_NOTHROW(max_eigenvector(a, ep.mu, ep.critical_nodes));
  CHECK_THROWS_AS(max_eigenvector(a, 100.0, {0}), std::runtime_error);
  CHECK_THROWS_AS(max_eigenvector(a, 0.0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(max_eigenvector(a, ep.mu, {}), std::invalid_argument);
}
