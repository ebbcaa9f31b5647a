#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxeig/ahp.hpp"
#include "maxeig/bench.hpp"
#include "maxeig/errors.hpp"
#include "maxeig/io.hpp"
#include "maxeig/spectral.hpp"

using maxeig::Matrix;
using maxeig::NumericPolicy;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "maxeig 0.1.0";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string vec_str(const maxeig::Vector& x) {
  std::string s = "(";
  for (int i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += fmt(x[i]);
  }
  return s + ")";
}

// nodes are shown 1-based everywhere
std::string cycle_str(const maxeig::Cycle& c) {
  std::string s;
  for (int v : c.nodes) s += std::to_string(v + 1) + " -> ";
  return s + std::to_string(c.nodes.front() + 1);
}

ordered_json one_based(const std::vector<int>& nodes) {
  ordered_json a = ordered_json::array();
  for (int v : nodes) a.push_back(v + 1);
  return a;
}

const char* method_name(maxeig::Method m) {
  switch (m) {
    case maxeig::Method::Jump: return "jump";
    case maxeig::Method::Karp: return "karp";
    case maxeig::Method::Power: return "power";
  }
  return "?";
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

struct Ctx {
  bool json = false;
  NumericPolicy policy;
  ordered_json timings = ordered_json::object();

  double power_tol() const { return std::max(1e-15, policy.rel_tol * 1e-3); }
};

Matrix load(Ctx& ctx, const std::string& path, ordered_json& input) {
  Timer t;
  std::string bytes = maxeig::read_input_bytes(path);
  Matrix a = maxeig::parse_matrix(bytes);
  ctx.timings["parse"] = t.ms();
  input = ordered_json{
      {"path", path}, {"digest", maxeig::digest(bytes)}, {"n", a.size()}};
  return a;
}

ordered_json eigenpair_json(const maxeig::Eigenpair& ep, bool with_x) {
  ordered_json j;
  j["mu"] = ep.mu;
  j["method"] = method_name(ep.method);
  j["irreducible"] = ep.irreducible;
  j["has_cycle"] = ep.has_cycle;
  if (ep.has_cycle && !ep.critical_cycle.empty()) {
    j["critical_cycle"] = one_based(ep.critical_cycle.nodes);
    j["cycle_geo_mean"] = ep.critical_cycle.geo_mean;
    j["critical_nodes"] = one_based(ep.critical_nodes);
  } else {
    j["critical_cycle"] = nullptr;
    j["critical_nodes"] = nullptr;
  }
  if (with_x) j["x"] = ep.x.data();
  return j;
}

void emit(const Ctx& ctx, const std::string& command, const ordered_json& args,
          const ordered_json& input, const ordered_json& results,
          const std::string& text) {
  if (ctx.json) {
    ordered_json rep{{"command", command},   {"args", args},
                     {"input", input},       {"results", results},
                     {"timings_ms", ctx.timings}, {"version", kVersion}};
    std::cout << rep.dump() << "\n";
  } else {
    std::cout << text;
  }
}

int run_mu(Ctx& ctx, const std::string& path, const std::string& method,
           int max_iter) {
  ordered_json input;
  Matrix a = load(ctx, path, input);
  ordered_json args{{"method", method},
                    {"tol", ctx.policy.rel_tol},
                    {"jump_limit", ctx.policy.jump_limit}};

  if (method == "all") {
    ordered_json results = ordered_json::object();
    std::string text;
    std::vector<double> mus;

    Timer tk;
    maxeig::Eigenpair karp = maxeig::mu_karp(a, ctx.policy);
    ctx.timings["karp"] = tk.ms();
    results["karp"] = eigenpair_json(karp, false);
    mus.push_back(karp.mu);
    text += "mu[karp] = " + fmt(karp.mu) + "\n";

    if (a.size() <= ctx.policy.jump_limit) {
      Timer tj;
      maxeig::Eigenpair jump = maxeig::mu_jump(a, ctx.policy);
      ctx.timings["jump"] = tj.ms();
      results["jump"] = eigenpair_json(jump, false);
      mus.push_back(jump.mu);
      text += "mu[jump] = " + fmt(jump.mu) + "\n";
    } else {
      results["jump"] = nullptr;
      text += "mu[jump] skipped: size above jump limit\n";
    }

    if (karp.irreducible) {
      Timer tp;
      try {
        maxeig::Eigenpair power =
            maxeig::mu_power(a, max_iter, ctx.power_tol(), ctx.policy);
        ctx.timings["power"] = tp.ms();
        results["power"] = eigenpair_json(power, false);
        mus.push_back(power.mu);
        text += "mu[power] = " + fmt(power.mu) + "\n";
      } catch (const maxeig::ConvergenceError& e) {
        results["power"] = nullptr;
        text += std::string("mu[power] failed: ") + e.what() + "\n";
      }
    } else {
      results["power"] = nullptr;
      text += "mu[power] skipped: matrix is reducible\n";
    }

    bool agree = true;
    for (double m : mus) {
      if (!ctx.policy.close(m, mus.front())) agree = false;
    }
    results["agree"] = agree;
    text += std::string("agree: ") + (agree ? "yes" : "no") + "\n";
    emit(ctx, "mu", args, input, results, text);
    return agree ? 0 : 1;
  }

  Timer t;
  maxeig::Eigenpair ep =
      method == "jump"
          ? maxeig::mu_jump(a, ctx.policy)
          : method == "power"
                ? maxeig::mu_power(a, max_iter, ctx.power_tol(), ctx.policy)
                : maxeig::mu_karp(a, ctx.policy);
  ctx.timings["compute"] = t.ms();

  std::string text = "mu = " + fmt(ep.mu) + "\n";
  if (ep.has_cycle) {
    text += "critical cycle: " + cycle_str(ep.critical_cycle) + "\n";
    text += std::string("irreducible: ") + (ep.irreducible ? "yes" : "no") + "\n";
  } else {
    text += "no cycle: every sufficiently long walk has product 0\n";
  }
  emit(ctx, "mu", args, input, eigenpair_json(ep, false), text);
  return 0;
}

int run_eigvec(Ctx& ctx, const std::string& path) {
  ordered_json input;
  Matrix a = load(ctx, path, input);
  ordered_json args{{"tol", ctx.policy.rel_tol}};

  Timer t;
  maxeig::Eigenpair ep = maxeig::mu_karp(a, ctx.policy);
  ctx.timings["compute"] = t.ms();

  ordered_json results = eigenpair_json(ep, true);
  std::string text = "mu = " + fmt(ep.mu) + "\n";
  if (ep.has_cycle) {
    double res = maxeig::eigen_residual(a, ep.mu, ep.x);
    results["residual"] = res;
    text += "x = " + vec_str(ep.x) + "\n";
    text += "critical cycle: " + cycle_str(ep.critical_cycle) + "\n";
    text += "residual = " + fmt(res) + "\n";
  } else {
    results["residual"] = nullptr;
    text += "x: none (mu = 0, no cycle)\n";
  }
  emit(ctx, "eigvec", args, input, results, text);
  return 0;
}

int run_check(Ctx& ctx, const std::string& path, bool want_sr,
              bool want_trans) {
  if (!want_sr && !want_trans) want_sr = want_trans = true;
  ordered_json input;
  Matrix a = load(ctx, path, input);
  ordered_json args{{"sr", want_sr}, {"transitive", want_trans}};

  ordered_json results = ordered_json::object();
  std::string text;
  bool all_ok = true;

  Timer t;
  auto v = maxeig::sr_violation(a, ctx.policy);
  bool sr_ok = !v.has_value();
  if (want_sr) {
    results["sr"] = sr_ok;
    if (v) {
      results["sr_violation"] = ordered_json{{"i", v->i + 1},
                                             {"j", v->j + 1},
                                             {"value", v->value},
                                             {"message", v->describe()}};
      text += "sr: no (" + v->describe() + ")\n";
      all_ok = false;
    } else {
      results["sr_violation"] = nullptr;
      text += "sr: yes\n";
    }
  }
  if (want_trans) {
    if (sr_ok) {
      bool tr = maxeig::is_transitive(maxeig::validate_sr(a, ctx.policy),
                                      ctx.policy);
      results["transitive"] = tr;
      text += std::string("transitive: ") + (tr ? "yes" : "no") + "\n";
      if (!tr) all_ok = false;
    } else {
      results["transitive"] = nullptr;
      text += "transitive: skipped (not symmetrically reciprocal)\n";
      all_ok = false;
    }
  }
  ctx.timings["compute"] = t.ms();
  emit(ctx, "check", args, input, results, text);
  return all_ok ? 0 : 1;
}

int run_weights(Ctx& ctx, const std::string& path,
                const std::string& normalize) {
  ordered_json input;
  Matrix m = load(ctx, path, input);
  ordered_json args{{"normalize", normalize}, {"tol", ctx.policy.rel_tol}};

  Timer t;
  maxeig::SRMatrix a = maxeig::validate_sr(m, ctx.policy);
  maxeig::WeightVector wv = maxeig::weight_vector(a, ctx.policy);
  double mu = maxeig::mu_karp(m, ctx.policy).mu;
  ctx.timings["compute"] = t.ms();

  maxeig::Vector w = wv.w;
  if (normalize == "sum") {
    double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (int i = 0; i < w.size(); ++i) w[i] /= s;
  }

  ordered_json results{{"w", w.data()},
                       {"relative_error", wv.error},
                       {"mu", mu}};
  std::string text = "w = " + vec_str(w) + "\n";
  text += "relative error = " + fmt(wv.error) + "\n";
  text += "mu = " + fmt(mu) + "\n";
  emit(ctx, "weights", args, input, results, text);
  return 0;
}

int run_tau_scan(Ctx& ctx, const std::string& path, double from, double to,
                 int steps) {
  ordered_json input;
  Matrix m = load(ctx, path, input);
  ordered_json args{{"from", from}, {"to", to}, {"steps", steps}};

  Timer t;
  maxeig::SRMatrix a = maxeig::validate_sr(m, ctx.policy);
  maxeig::TauScan ts = maxeig::tau_scan(a, from, to, steps, ctx.policy);
  ctx.timings["compute"] = t.ms();

  ordered_json results{{"entry", ordered_json{ts.entry_i + 1, ts.entry_j + 1}},
                       {"mu0", ts.mu0},
                       {"argmin_tau", ts.taus[ts.argmin]},
                       {"tau1", ts.tau1},
                       {"tau2", ts.tau2},
                       {"unimodal", ts.unimodal},
                       {"taus", ts.taus},
                       {"mus", ts.mus}};
  std::string text = "entry: (" + std::to_string(ts.entry_i + 1) + ", " +
                     std::to_string(ts.entry_j + 1) + ")\n";
  text += "grid: [" + fmt(from) + ", " + fmt(to) + "], " +
          std::to_string(steps) + " points\n";
  text += "min mu = " + fmt(ts.mu0) + " at tau = " + fmt(ts.taus[ts.argmin]) +
          "\n";
  text += "flat valley: [" + fmt(ts.tau1) + ", " + fmt(ts.tau2) + "]\n";
  text += std::string("unimodal: ") + (ts.unimodal ? "yes" : "no") + "\n";
  emit(ctx, "tau-scan", args, input, results, text);
  return 0;
}

int run_bench_cmd(Ctx& ctx, const std::string& sizes, int trials,
                  uint64_t seed) {
  int lo = 0, hi = 0;
  auto dots = sizes.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(sizes);
    } else {
      lo = std::stoi(sizes.substr(0, dots));
      hi = std::stoi(sizes.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw maxeig::ParseError("bad --sizes, expected N or LO..HI: " + sizes);
  }

  ordered_json args{{"sizes", sizes}, {"trials", trials}, {"seed", seed}};
  Timer t;
  std::vector<maxeig::BenchRow> rows =
      maxeig::run_bench(lo, hi, trials, seed, ctx.policy);
  ctx.timings["compute"] = t.ms();

  ordered_json results = ordered_json::array();
  for (const auto& r : rows) {
    results.push_back(ordered_json{{"n", r.n},
                                   {"trials", r.trials},
                                   {"method", r.method},
                                   {"median_ms", r.median_ms},
                                   {"agreement", r.agreement}});
  }
  emit(ctx, "bench", args, nullptr, results, maxeig::bench_csv(rows));
  return 0;
}

int fail_exit(bool json, int code, const std::string& msg) {
  if (json) {
    std::cerr << ordered_json{{"error", code}, {"message", msg}}.dump()
              << "\n";
  } else {
    std::cerr << "maxeig: " << msg << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-times spectral analysis of nonnegative matrices"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Ctx ctx;
  app.add_flag("--json", ctx.json, "machine-readable report on stdout");
  app.add_option("--tol", ctx.policy.rel_tol, "relative comparison tolerance")
      ->capture_default_str();
  app.add_option("--jump-limit", ctx.policy.jump_limit,
                 "largest size for factorial enumeration")
      ->envname("MAXEIG_JUMP_LIMIT")
      ->capture_default_str();

  std::string mu_path, mu_method = "karp";
  int max_iter = 10000;
  auto* mu_cmd = app.add_subcommand("mu", "maximum cycle geometric mean");
  mu_cmd->fallthrough();
  mu_cmd->add_option("input", mu_path, "CSV or JSON matrix, - for stdin")
      ->required();
  mu_cmd->add_option("--method", mu_method, "jump, karp, power or all")
      ->check(CLI::IsMember({"jump", "karp", "power", "all"}))
      ->capture_default_str();
  mu_cmd->add_option("--max-iter", max_iter, "power iteration budget")
      ->capture_default_str();

  std::string eig_path;
  auto* eig_cmd =
      app.add_subcommand("eigvec", "max eigenvector and critical structure");
  eig_cmd->fallthrough();
  eig_cmd->add_option("input", eig_path, "CSV or JSON matrix, - for stdin")
      ->required();

  std::string check_path;
  bool check_sr = false, check_trans = false;
  auto* check_cmd =
      app.add_subcommand("check", "symmetric reciprocity and transitivity");
  check_cmd->fallthrough();
  check_cmd->add_option("input", check_path, "CSV or JSON matrix, - for stdin")
      ->required();
  check_cmd->add_flag("--sr", check_sr, "check symmetric reciprocity");
  check_cmd->add_flag("--transitive", check_trans, "check transitivity");

  std::string weights_path, normalize = "max";
  auto* weights_cmd =
      app.add_subcommand("weights", "ranking weights for a reciprocal matrix");
  weights_cmd->fallthrough();
  weights_cmd
      ->add_option("input", weights_path, "CSV or JSON matrix, - for stdin")
      ->required();
  weights_cmd->add_option("--normalize", normalize, "max or sum")
      ->check(CLI::IsMember({"max", "sum"}))
      ->capture_default_str();

  std::string tau_path;
  double tau_from = 0.1, tau_to = 10.0;
  int tau_steps = 200;
  auto* tau_cmd = app.add_subcommand(
      "tau-scan", "rescale one reciprocal pair over a grid and track mu");
  tau_cmd->fallthrough();
  tau_cmd->add_option("input", tau_path, "CSV or JSON matrix, - for stdin")
      ->required();
  tau_cmd->add_option("--from", tau_from, "grid start")->capture_default_str();
  tau_cmd->add_option("--to", tau_to, "grid end")->capture_default_str();
  tau_cmd->add_option("--steps", tau_steps, "grid points")
      ->capture_default_str();

  std::string bench_sizes = "4..7";
  int bench_trials = 5;
  uint64_t bench_seed = 42;
  auto* bench_cmd =
      app.add_subcommand("bench", "time the methods on random inputs");
  bench_cmd->fallthrough();
  bench_cmd->add_option("--sizes", bench_sizes, "N or LO..HI")
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench_trials, "matrices per size")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "generator seed")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mu_cmd) return run_mu(ctx, mu_path, mu_method, max_iter);
    if (*eig_cmd) return run_eigvec(ctx, eig_path);
    if (*check_cmd) return run_check(ctx, check_path, check_sr, check_trans);
    if (*weights_cmd) return run_weights(ctx, weights_path, normalize);
    if (*tau_cmd)
      return run_tau_scan(ctx, tau_path, tau_from, tau_to, tau_steps);
    if (*bench_cmd) return run_bench_cmd(ctx, bench_sizes, bench_trials,
                                         bench_seed);
  } catch (const maxeig::ParseError& e) {
    return fail_exit(ctx.json, 2, e.what());
  } catch (const maxeig::SrError& e) {
    return fail_exit(ctx.json, 2, e.what());
  } catch (const maxeig::LimitError& e) {
    return fail_exit(ctx.json, 3, e.what());
  } catch (const maxeig::ConvergenceError& e) {
    return fail_exit(ctx.json, 4, e.what());
  } catch (const std::invalid_argument& e) {
    return fail_exit(ctx.json, 2, e.what());
  } catch (const std::exception& e) {
    return fail_exit(ctx.json, 1, e.what());
  }
  return 0;
}
