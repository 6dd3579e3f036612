#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcest/entropy.hpp"
#include "qcest/formulas.hpp"
#include "qcest/locc.hpp"
#include "qcest/povm.hpp"

namespace qcest::cli {

namespace {

using nlohmann::json;
constexpr double pi = std::numbers::pi;

// Round to the emitted 12-significant-digit decimal so JSON numbers carry
// exactly the documented precision (and serialize deterministically).
double round12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

json config_json(const RunConfig& cfg) {
  json pairs = json::array();
  for (const auto& [n, m] : cfg.pairs) pairs.push_back({n, m});
  json j{
      {"command", cfg.command},
      {"pairs", pairs},
      {"steps", cfg.steps},
      {"theta0_steps", cfg.theta0_steps == 0 ? cfg.steps : cfg.theta0_steps},
      {"samples", cfg.samples},
      {"trials", cfg.trials},
      {"restarts", cfg.restarts},
      {"seed", cfg.seed},
      {"format", cfg.format},
      {"out", cfg.out},
      {"degrees", cfg.degrees},
  };
  if (cfg.has_theta) j["theta"] = round12(cfg.theta);
  if (cfg.has_theta0) j["theta0"] = round12(cfg.theta0);
  if (!cfg.scenario.empty()) j["scenario"] = cfg.scenario;
  return j;
}

json report_skeleton(const RunConfig& cfg) {
  return json{{"spec_version", "1"}, {"config", config_json(cfg)}};
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) {
    xs[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  }
  return xs;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Scenario build_scenario(const RunConfig& cfg) {
  require(cfg.has_theta, cfg.command + ": --theta is required");
  if (cfg.scenario == "single") {
    require(cfg.pairs.size() == 1, "scenario 'single' needs exactly one --pairs entry");
    return SingleCircle{cfg.pairs[0].first, cfg.pairs[0].second, cfg.theta};
  }
  if (cfg.scenario == "two-circle") {
    require(cfg.has_theta0, "scenario 'two-circle' needs --theta0");
    return TwoCircle{cfg.theta, cfg.theta0};
  }
  if (cfg.scenario == "opposite-parallel") {
    return OppositeCircles{cfg.theta, PairKind::parallel};
  }
  if (cfg.scenario == "opposite-antiparallel") {
    return OppositeCircles{cfg.theta, PairKind::antiparallel};
  }
  throw std::invalid_argument(
      "--scenario must be one of: single, two-circle, opposite-parallel, "
      "opposite-antiparallel");
}

json scenario_json(const Scenario& sc) {
  if (const auto* s = std::get_if<SingleCircle>(&sc)) {
    return {{"type", "single"}, {"n", s->n}, {"m", s->m}, {"theta", round12(s->theta)}};
  }
  if (const auto* t = std::get_if<TwoCircle>(&sc)) {
    return {{"type", "two-circle"},
            {"theta", round12(t->theta)},
            {"theta0", round12(t->theta0)}};
  }
  const auto& o = std::get<OppositeCircles>(sc);
  return {{"type", o.kind == PairKind::parallel ? "opposite-parallel"
                                                : "opposite-antiparallel"},
          {"theta", round12(o.theta)}};
}

Strategy named_strategy(const Scenario& sc) {
  if (const auto* s = std::get_if<SingleCircle>(&sc)) {
    return fourier_strategy_single_circle(s->n, s->m, s->theta);
  }
  if (const auto* t = std::get_if<TwoCircle>(&sc)) {
    return two_circle_strategy(t->theta, t->theta0);
  }
  const auto& o = std::get<OppositeCircles>(sc);
  return o.kind == PairKind::parallel ? opposite_parallel_strategy(o.theta)
                                      : opposite_antiparallel_strategy(o.theta);
}

void emit_report(const json& report, std::ostream& out) { out << report.dump(2) << "\n"; }

int cmd_curves(const RunConfig& cfg, std::ostream& out) {
  require(!cfg.pairs.empty(), "curves: --pairs must name at least one n:m pair");
  require(cfg.steps >= 1, "curves: --steps must be positive");
  for (const auto& [n, m] : cfg.pairs) {
    require(n >= 0 && m >= 0 && n + m >= 1, "curves: each pair needs n, m >= 0, n + m >= 1");
  }
  const auto grid = linspace(0.0, pi, cfg.steps);
  if (cfg.format == "json") {
    json rows = json::array();
    for (double theta : grid) {
      for (const auto& [n, m] : cfg.pairs) {
        rows.push_back({{"theta", round12(theta)},
                        {"n", n},
                        {"m", m},
                        {"fmax", round12(fmax_nm(n, m, theta))}});
      }
    }
    json report = report_skeleton(cfg);
    report["rows"] = rows;
    emit_report(report, out);
    return kExitOk;
  }
  out << "theta,n,m,fmax\n";
  for (double theta : grid) {
    for (const auto& [n, m] : cfg.pairs) {
      out << format_number(theta) << ',' << n << ',' << m << ','
          << format_number(fmax_nm(n, m, theta)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_surface(const RunConfig& cfg, std::ostream& out) {
  require(cfg.steps >= 1, "surface: --steps must be positive");
  const int t0_steps = cfg.theta0_steps == 0 ? cfg.steps : cfg.theta0_steps;
  require(t0_steps >= 1, "surface: --theta0-steps must be positive");

  struct Row {
    double theta;
    double theta0;
    double fmax;
    const char* slice;
  };
  std::vector<Row> rows;
  constexpr double tol = 1e-12;
  for (double theta : linspace(0.0, pi, cfg.steps)) {
    auto theta0s = linspace(-theta, pi - theta, t0_steps);
    theta0s.push_back(0.0);                  // parallel slice
    theta0s.push_back(pi - 2.0 * theta);     // anti-parallel slice
    std::sort(theta0s.begin(), theta0s.end());
    double prev = 0.0;
    bool first = true;
    for (double theta0 : theta0s) {
      if (!first && std::abs(theta0 - prev) < tol) continue;
      first = false;
      prev = theta0;
      const char* slice = std::abs(theta0) < tol ? "parallel"
                          : std::abs(theta0 - (pi - 2.0 * theta)) < tol ? "antiparallel"
                                                                        : "none";
      rows.push_back({theta, theta0, fmax_two_circle(theta, theta0), slice});
    }
  }

  if (cfg.format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) {
      jrows.push_back({{"theta", round12(r.theta)},
                       {"theta0", round12(r.theta0)},
                       {"fmax", round12(r.fmax)},
                       {"slice", r.slice}});
    }
    json report = report_skeleton(cfg);
    report["rows"] = jrows;
    emit_report(report, out);
    return kExitOk;
  }
  out << "theta,theta0,fmax,slice\n";
  for (const auto& r : rows) {
    out << format_number(r.theta) << ',' << format_number(r.theta0) << ','
        << format_number(r.fmax) << ',' << r.slice << '\n';
  }
  return kExitOk;
}

json entropy_summary(const RunConfig& cfg) {
  const auto [s_e1, s_e2] = counterexample_entropies();
  json summary = report_skeleton(cfg);
  summary["sphere"] = {
      {"parallel", round12(von_neumann_entropy(sphere_average_state(PairKind::parallel)))},
      {"antiparallel",
       round12(von_neumann_entropy(sphere_average_state(PairKind::antiparallel)))},
  };
  summary["counterexample"] = {{"sE1", round12(s_e1)}, {"sE2", round12(s_e2)}};
  return summary;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
  require(cfg.steps >= 1, "entropy: --steps must be positive");
  const auto grid = linspace(0.0, pi, cfg.steps);
  json summary = entropy_summary(cfg);
  if (cfg.format == "json") {
    json rows = json::array();
    for (double theta : grid) {
      rows.push_back(
          {{"theta", round12(theta)},
           {"s_20", round12(von_neumann_entropy(circle_average_state(2, 0, theta)))},
           {"s_11", round12(von_neumann_entropy(circle_average_state(1, 1, theta)))}});
    }
    summary["rows"] = rows;
    emit_report(summary, out);
    return kExitOk;
  }
  out << "theta,s_20,s_11\n";
  for (double theta : grid) {
    out << format_number(theta) << ','
        << format_number(von_neumann_entropy(circle_average_state(2, 0, theta))) << ','
        << format_number(von_neumann_entropy(circle_average_state(1, 1, theta))) << '\n';
  }
  if (!cfg.out.empty()) {
    std::ofstream side(cfg.out + ".summary.json");
    if (!side) throw std::invalid_argument("entropy: cannot write summary next to --out");
    emit_report(summary, side);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require(cfg.trials >= 1, "verify: --trials must be positive");
  const Scenario sc = build_scenario(cfg);
  const Strategy named = named_strategy(sc);
  const double named_fidelity = average_fidelity(named, sc);
  const BoundReport certified = certify_bound(sc, cfg.trials, cfg.seed);
  const bool attained = std::abs(named_fidelity - certified.bound) <= 1e-10;
  const bool bounded = certified.margin >= -1e-9;

  json report = report_skeleton(cfg);
  report["scenario"] = scenario_json(sc);
  report["bound"] = round12(certified.bound);
  report["max_found"] = round12(certified.max_found);
  report["margin"] = round12(certified.margin);
  report["named_fidelity"] = round12(named_fidelity);
  report["attained_by_named_strategy"] = attained;
  report["verified"] = attained && bounded;
  emit_report(report, out);
  return attained && bounded ? kExitOk : kExitVerificationFailed;
}

int cmd_locc(const RunConfig& cfg, std::ostream& out) {
  require(cfg.has_theta, "locc: --theta is required");
  require(cfg.samples >= 1, "locc: --samples must be positive");
  const double exact = locc_average_fidelity_exact(cfg.theta);
  const double closed = locc_closed_form(cfg.theta);
  const McEstimate mc = locc_average_fidelity_mc(cfg.theta, cfg.samples, cfg.seed);
  const bool exact_ok = std::abs(exact - closed) < 1e-12;
  const bool mc_ok = std::abs(mc.mean - exact) <= 4.0 * mc.std_error;

  json report = report_skeleton(cfg);
  report["theta"] = round12(cfg.theta);
  report["exact"] = round12(exact);
  report["closed_form"] = round12(closed);
  report["mc_mean"] = round12(mc.mean);
  report["mc_se"] = round12(mc.std_error);
  report["verified"] = exact_ok && mc_ok;
  emit_report(report, out);
  return exact_ok && mc_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out) {
  require(cfg.restarts >= 0, "optimize: --restarts must be nonnegative");
  const Scenario sc = build_scenario(cfg);
  const double bound = scenario_bound(sc);
  const int dim = scenario_dim(sc);

  std::mt19937_64 eng(cfg.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  // The named optimal strategy seeds the search; random POVMs with
  // hill-climbed phases provide the restarts.
  Strategy best = hill_climb_phases(named_strategy(sc), sc, 40, eng());
  double best_fidelity = average_fidelity(best, sc);
  for (int t = 0; t < cfg.restarts; ++t) {
    const int count = dim + static_cast<int>(eng() % static_cast<std::uint64_t>(dim + 1));
    Strategy cand{random_povm(dim, count, eng()), {}};
    for (int r = 0; r < count; ++r) cand.estimated_phis.push_back(2.0 * pi * uniform(eng));
    cand = hill_climb_phases(cand, sc, 40, eng());
    const double f = average_fidelity(cand, sc);
    if (f > best_fidelity) {
      best_fidelity = f;
      best = cand;
    }
  }

  json elements = json::array();
  for (const auto& e : best.povm.elements) {
    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back({round12(c.real()), round12(c.imag())});
    elements.push_back({{"weight", round12(e.weight)}, {"coeffs", coeffs}});
  }
  json phis = json::array();
  for (double p : best.estimated_phis) phis.push_back(round12(p));

  json report = report_skeleton(cfg);
  report["scenario"] = scenario_json(sc);
  report["bound"] = round12(bound);
  report["best"] = {{"fidelity", round12(best_fidelity)},
                    {"dim", best.povm.dim},
                    {"elements", elements},
                    {"estimated_phis", phis}};
  report["gap"] = round12(bound - best_fidelity);
  emit_report(report, out);
  return kExitOk;
}

bool parse_pairs(const std::string& arg, std::vector<std::pair<int, int>>& pairs,
                 std::string& error) {
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      error = "malformed pair '" + item + "' (expected n:m)";
      return false;
    }
    try {
      const int n = std::stoi(item.substr(0, colon));
      const int m = std::stoi(item.substr(colon + 1));
      pairs.emplace_back(n, m);
    } catch (const std::exception&) {
      error = "malformed pair '" + item + "' (expected n:m)";
      return false;
    }
  }
  if (pairs.empty()) {
    error = "--pairs must name at least one n:m pair";
    return false;
  }
  return true;
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "curves") return cmd_curves(cfg, out);
    if (cfg.command == "surface") return cmd_surface(cfg, out);
    if (cfg.command == "entropy") return cmd_entropy(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "locc") return cmd_locc(cfg, out);
    if (cfg.command == "optimize") return cmd_optimize(cfg, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Optimal phase estimation for qubits confined to Bloch-sphere circles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string pairs_arg;

  struct SubOpts {
    CLI::App* sub = nullptr;
    CLI::Option* theta = nullptr;
    CLI::Option* theta0 = nullptr;
  };
  std::vector<SubOpts> subs;

  const auto add_common = [&](CLI::App* sub, bool wants_theta, bool wants_theta0) {
    SubOpts opts;
    opts.sub = sub;
    sub->add_option("--seed", cfg.seed, "RNG seed (default 0)");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--degrees", cfg.degrees, "interpret --theta/--theta0 in degrees");
    if (wants_theta) opts.theta = sub->add_option("--theta", cfg.theta, "circle colatitude");
    if (wants_theta0) {
      opts.theta0 = sub->add_option("--theta0", cfg.theta0, "second-circle offset");
    }
    subs.push_back(opts);
    return opts.sub;
  };

  auto* curves = app.add_subcommand("curves", "optimal fidelity curves over theta");
  curves->add_option("--pairs", pairs_arg, "comma-separated n:m list")->required();
  curves->add_option("--steps", cfg.steps, "theta grid size");
  add_common(curves, false, false);

  auto* surface = app.add_subcommand("surface", "two-circle fidelity surface");
  surface->add_option("--steps", cfg.steps, "theta grid size");
  surface->add_option("--theta0-steps", cfg.theta0_steps, "theta0 grid size (default: --steps)");
  add_common(surface, false, false);

  auto* entropy = app.add_subcommand("entropy", "average-state entropies");
  entropy->add_option("--steps", cfg.steps, "theta grid size");
  add_common(entropy, false, false);

  auto* verify = app.add_subcommand("verify", "certify the closed-form bound");
  verify->add_option("--scenario", cfg.scenario, "ensemble family")->required();
  verify->add_option("--pairs", pairs_arg, "n:m for scenario 'single'");
  verify->add_option("--trials", cfg.trials, "random POVM trials");
  add_common(verify, true, true);

  auto* locc = app.add_subcommand("locc", "local-measurement protocol report");
  locc->add_option("--samples", cfg.samples, "Monte Carlo sample count");
  add_common(locc, true, false);

  auto* optimize = app.add_subcommand("optimize", "search strategies for a scenario");
  optimize->add_option("--scenario", cfg.scenario, "ensemble family")->required();
  optimize->add_option("--pairs", pairs_arg, "n:m for scenario 'single'");
  optimize->add_option("--restarts", cfg.restarts, "random restarts");
  add_common(optimize, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& opts : subs) {
    if (!opts.sub->parsed()) continue;
    cfg.command = opts.sub->get_name();
    if (opts.theta != nullptr) cfg.has_theta = opts.theta->count() > 0;
    if (opts.theta0 != nullptr) cfg.has_theta0 = opts.theta0->count() > 0;
  }
  if (cfg.degrees) {
    cfg.theta *= pi / 180.0;
    cfg.theta0 *= pi / 180.0;
  }
  if (!pairs_arg.empty()) {
    std::string error;
    if (!parse_pairs(pairs_arg, cfg.pairs, error)) {
      std::cerr << "error: " << error << "\n";
      return kExitUsage;
    }
  }

  if (cfg.out.empty()) {
    return run_command(cfg, std::cout, std::cerr);
  }
  std::ofstream file(cfg.out);
  if (!file) {
    std::cerr << "error: cannot open '" << cfg.out << "' for writing\n";
    return kExitUsage;
  }
  return run_command(cfg, file, std::cerr);
}

}  // namespace qcest::cli
