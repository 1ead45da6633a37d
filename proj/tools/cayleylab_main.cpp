// cayleylab: exact and asymptotic bounds on the probability that a random
// Cayley digraph has diameter two, plus Monte Carlo estimation.
//
// Exit codes: 0 success, 2 usage error, 3 precondition violation,
// 4 feasibility-guard violation (enumeration/quadrature budget).

#include "cayleylab/asymptotics.hpp"
#include "cayleylab/bounds.hpp"
#include "cayleylab/combinatorics.hpp"
#include "cayleylab/group.hpp"
#include "cayleylab/montecarlo.hpp"
#include "cayleylab/report_io.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace cayleylab;

constexpr std::uint64_t kDefaultSeed = 0xCA11E7;  // documented fixed default

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
}

std::string render(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int worker_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  int threads = hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
  if (const char* cap_text = std::getenv("CAYLEYLAB_THREADS")) {
    const int cap = std::atoi(cap_text);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

// ln p(n,k,t) per unit n, for rate regressions.
double exact_rate(long n, long k, long t) {
  const ExactRatio p = p_incl_excl(n, k, t);
  if (p == 0) throw precondition_error("exact rate undefined: p = 0");
  return static_cast<double>(log_rational(p) / n);
}

std::vector<ScanRow> scan_linear(double c, const std::vector<long>& ns) {
  std::vector<ScanRow> rows;
  const double prediction = exp_rate_linear(c);
  for (long n : ns) {
    const long k = static_cast<long>(c * n);
    const long t = (n - 4) / 12;
    const double value = exact_rate(n, k, t);
    rows.push_back({"linear", n, k, value, prediction,
                    std::abs(value - prediction) / std::abs(prediction)});
  }
  return rows;
}

std::vector<ScanRow> scan_sublinear(double alpha, const std::vector<long>& ns) {
  std::vector<ScanRow> rows;
  for (long n : ns) {
    const long k = static_cast<long>(std::pow(static_cast<double>(n), alpha));
    const long t = (n - 4) / 12;
    const double prediction =
        exp_rate_sublinear(static_cast<double>(t) / n, static_cast<double>(k) / n);
    const double value = exact_rate(n, k, t);
    rows.push_back({"sublinear", n, k, value, prediction,
                    std::abs(value - prediction) / std::abs(prediction)});
  }
  return rows;
}

std::vector<ScanRow> scan_sqrt(double c, const std::vector<long>& ds) {
  std::vector<ScanRow> rows;
  const double prediction = abelian_sqrt_limit(c);
  for (long d : ds) {
    const long n = 1L << d;
    const long t = (n - 2) / 2;
    const long k = static_cast<long>(c * std::sqrt(static_cast<double>(n)));
    if (k < 1 || k > t) throw precondition_error("sqrt scan: k outside [1, t]");
    const double value = to_double(b_exact(t, k) * c_factor(t, k));
    rows.push_back({"sqrt", n, k, value, prediction,
                    std::abs(value - prediction) / std::abs(prediction)});
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds and simulations for diameter-two random Cayley digraphs"};
  app.require_subcommand(1);

  // ---- exact ----
  long ex_n = 0, ex_k = 0, ex_t = 0;
  std::string ex_output = "json", ex_out;
  CLI::App* cmd_exact = app.add_subcommand("exact", "exact p(n,k,t) as a rational");
  cmd_exact->add_option("--n", ex_n, "group order n")->required();
  cmd_exact->add_option("--k", ex_k, "generating-set size k")->required();
  cmd_exact->add_option("--t", ex_t, "number of disjoint pairs t")->required();
  cmd_exact->add_option("--output", ex_output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_exact->add_option("--out", ex_out, "output path (default stdout)");

  // ---- bounds ----
  std::string bd_regime = "general", bd_output = "json", bd_out;
  long bd_n = 0, bd_k = 0, bd_t = -1, bd_d = 0;
  CLI::App* cmd_bounds = app.add_subcommand("bounds", "probability brackets for Pr[diam > 2]");
  cmd_bounds->add_option("--regime", bd_regime, "general or abelian")
      ->check(CLI::IsMember({"general", "abelian"}));
  cmd_bounds->add_option("--n", bd_n, "group order (general regime)");
  cmd_bounds->add_option("--d", bd_d, "exponent of 2^d (abelian regime)");
  cmd_bounds->add_option("--k", bd_k, "generating-set size k")->required();
  cmd_bounds->add_option("--t", bd_t, "override t (general regime only)");
  cmd_bounds->add_option("--output", bd_output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_bounds->add_option("--out", bd_out, "output path (default stdout)");

  // ---- simulate ----
  std::string sim_group, sim_output = "json", sim_out;
  long sim_k = 0, sim_trials = 100000;
  long sim_y = -1;
  std::uint64_t sim_seed = kDefaultSeed;
  CLI::App* cmd_sim = app.add_subcommand("simulate", "Monte Carlo estimate of Pr[diam > 2]");
  cmd_sim->add_option("--group", sim_group, "group spec, e.g. Z2^5, Q8xZ2^2, Z12")->required();
  cmd_sim->add_option("--k", sim_k, "generating-set size k")->required();
  cmd_sim->add_option("--trials", sim_trials, "number of sampled subsets");
  cmd_sim->add_option("--seed", sim_seed, "64-bit RNG seed");
  cmd_sim->add_option("--y", sim_y, "estimate Pr[y not in SS] for this target instead");
  cmd_sim->add_option("--output", sim_output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_sim->add_option("--out", sim_out, "output path (default stdout)");

  // ---- asymptotics ----
  std::string as_regime, as_output = "csv", as_out;
  double as_c = 0.0, as_alpha = 0.0;
  long as_n = 0, as_d = 0;
  CLI::App* cmd_asym = app.add_subcommand("asymptotics", "rate predictions vs exact values");
  cmd_asym->add_option("--regime", as_regime, "linear, sublinear, or sqrt")
      ->required()
      ->check(CLI::IsMember({"linear", "sublinear", "sqrt"}));
  cmd_asym->add_option("--c", as_c, "c for linear (k = cn) or sqrt (k = c sqrt(n)) regimes");
  cmd_asym->add_option("--alpha", as_alpha, "alpha for the sublinear regime (k = n^alpha)");
  cmd_asym->add_option("--n", as_n, "single n instead of the default grid");
  cmd_asym->add_option("--d", as_d, "single d (sqrt regime, n = 2^d)");
  cmd_asym->add_option("--output", as_output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_asym->add_option("--out", as_out, "output path (default stdout)");

  // ---- threshold-scan ----
  long th_tmin = 0, th_tmax = 0;
  double th_scale = 1.0;
  bool th_refined = false;
  std::string th_output = "csv", th_out;
  CLI::App* cmd_thresh =
      app.add_subcommand("threshold-scan", "abelian upper bound along k = 2 sqrt(t ln t)");
  cmd_thresh->add_option("--t-min", th_tmin, "starting t (doubles up to --t-max)")->required();
  cmd_thresh->add_option("--t-max", th_tmax, "final t")->required();
  cmd_thresh->add_option("--scale", th_scale, "multiplier applied to threshold_k(t)");
  cmd_thresh->add_flag("--refined", th_refined, "use 2 sqrt(t ln t + ln 2)");
  cmd_thresh->add_option("--output", th_output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_thresh->add_option("--out", th_out, "output path (default stdout)");

  // ---- group-info ----
  std::string gi_group, gi_output = "json", gi_out;
  CLI::App* cmd_info = app.add_subcommand("group-info", "order, structure, and sqrt ratio");
  cmd_info->add_option("--group", gi_group, "group spec")->required();
  cmd_info->add_option("--output", gi_output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_info->add_option("--out", gi_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; any parse failure is usage
  }

  try {
    if (*cmd_exact) {
      const ExactReport report{ex_n, ex_k, ex_t, p_incl_excl(ex_n, ex_k, ex_t)};
      emit(ex_output == "json" ? render(to_json(report)) : to_csv(report), ex_out);
    } else if (*cmd_bounds) {
      DiameterBoundReport report;
      if (bd_regime == "abelian") {
        if (bd_d < 1) throw precondition_error("bounds: abelian regime requires --d >= 1");
        report = theorem2_bounds(static_cast<int>(bd_d), bd_k);
      } else {
        if (bd_n < 4) throw precondition_error("bounds: general regime requires --n >= 4");
        report = bd_t >= 0 ? theorem1_report(bd_n, bd_k, bd_t) : theorem1_report(bd_n, bd_k);
      }
      emit(bd_output == "json" ? render(to_json(report)) : to_csv(report), bd_out);
    } else if (*cmd_sim) {
      const FiniteGroup g = FiniteGroup::parse(sim_group);
      const int threads = worker_threads();
      SimulationReport report;
      report.group_spec = g.spec();
      report.n = g.order();
      report.k = sim_k;
      if (sim_y >= 0) {
        report.estimate =
            estimate_coX(g, static_cast<int>(sim_y), sim_k, sim_trials, sim_seed, threads);
      } else {
        report.estimate = estimate_pr_diam_gt2(g, sim_k, sim_trials, sim_seed, threads);
      }
      if (sim_output == "json") {
        nlohmann::json j = to_json(report);
        if (sim_y >= 0) j["y"] = sim_y;
        emit(render(j), sim_out);
      } else {
        emit(to_csv(report), sim_out);
      }
    } else if (*cmd_asym) {
      std::vector<ScanRow> rows;
      if (as_regime == "linear") {
        if (!(as_c > 0)) throw precondition_error("asymptotics: linear regime requires --c");
        rows = scan_linear(as_c, as_n > 0 ? std::vector<long>{as_n}
                                          : std::vector<long>{240, 480, 960, 1920});
      } else if (as_regime == "sublinear") {
        if (!(as_alpha > 0.5 && as_alpha < 1.0))
          throw precondition_error("asymptotics: sublinear regime requires 1/2 < --alpha < 1");
        rows = scan_sublinear(as_alpha, as_n > 0 ? std::vector<long>{as_n}
                                                 : std::vector<long>{2048, 4096, 8192});
      } else {
        if (!(as_c > 0)) throw precondition_error("asymptotics: sqrt regime requires --c > 0");
        rows = scan_sqrt(as_c, as_d > 0 ? std::vector<long>{as_d}
                                        : std::vector<long>{10, 12, 14, 16});
      }
      emit(as_output == "json" ? render(to_json(rows)) : to_csv(rows), as_out);
    } else if (*cmd_thresh) {
      const std::vector<ThresholdRow> rows =
          threshold_scan(th_tmin, th_tmax, th_scale, th_refined);
      emit(th_output == "json" ? render(to_json(rows)) : to_csv(rows), th_out);
    } else if (*cmd_info) {
      const FiniteGroup g = FiniteGroup::parse(gi_group);
      GroupInfoReport report;
      report.spec = g.spec();
      report.order = g.order();
      report.elem_abelian_2 = g.elementary_abelian_2();
      report.max_sqrt_ratio = max_sqrt_ratio(g);
      // Tables up to order 256 are fully verifiable; larger groups are
      // built from verified components.
      if (g.order() <= 256) g.verify_axioms();
      report.axioms_ok = true;
      emit(gi_output == "json" ? render(to_json(report)) : to_csv(report), gi_out);
    }
  } catch (const precondition_error& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 3;
  } catch (const feasibility_error& e) {
    std::cerr << "feasibility guard: " << e.what() << "\n";
    return 4;
  } catch (const quadrature_error& e) {
    std::cerr << "quadrature failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
