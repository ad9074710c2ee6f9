#include "wlanrr_cli/cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "wlanrr/convex_subsets.hpp"
#include "wlanrr/error.hpp"
#include "wlanrr/mac_simulator.hpp"
#include "wlanrr/example_scenario.hpp"
#include "wlanrr/rate_region.hpp"
#include "wlanrr/tolerances.hpp"
#include "wlanrr_cli/format.hpp"
#include "wlanrr_cli/scenario.hpp"
#include "wlanrr_cli/verify.hpp"

namespace wlanrr::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string scenario_path;
  std::string out_path;
  std::string format;
  std::optional<std::uint64_t> seed;

  std::vector<double> x;
  std::vector<double> tau;
  std::vector<double> bursts;
  std::vector<double> direction;
  std::vector<double> point;
  std::size_t grid = 0;
  bool symmetric = false;

  std::string paper_example;
  std::string suite;
  std::size_t samples = 0;
  std::uint64_t slots = 1'000'000;
  std::uint32_t batches = 40;
};

/// Property failure: the report is still written, the exit code is 5.
struct PropertyFailure {
  std::string payload;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("wlanrr", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::err);
  if (const char* env = std::getenv("WLANRR_LOG")) {
    const std::string level = env;
    if (level == "error") {
      logger->set_level(spdlog::level::err);
    } else if (level == "info") {
      logger->set_level(spdlog::level::info);
    } else if (level == "debug") {
      logger->set_level(spdlog::level::debug);
    } else {
      logger->warn("ignoring WLANRR_LOG='{}' (expected error, info or debug)", level);
    }
  }
  return logger;
}

Scenario scenario_or_empty(const Options& opt) {
  if (opt.scenario_path.empty()) return {};
  return load_scenario(opt.scenario_path);
}

const WlanConfig& require_wlan(const Scenario& s, const char* command) {
  if (!s.wlan) throw ScenarioError(std::string("$.wlan: ") + command + " needs a \"wlan\" scenario");
  return *s.wlan;
}

std::uint64_t seed_of(const Options& opt, const Scenario& s) {
  if (opt.seed) return *opt.seed;
  return s.seed.value_or(kDefaultSeed);
}

AttemptVector attempt_from(const Options& opt, const WlanConfig& cfg) {
  if (!opt.x.empty() && !opt.tau.empty()) throw DomainError("give either --x or --tau, not both");
  if (opt.x.empty() && opt.tau.empty()) throw DomainError("one of --x or --tau is required");
  AttemptVector x = opt.x.empty() ? tau_to_x(opt.tau) : AttemptVector(opt.x);
  if (x.size() != cfg.size()) throw DimensionError("attempt vector length does not match n");
  return x;
}

BurstVector bursts_from(const Options& opt, const WlanConfig& cfg) {
  if (opt.bursts.empty()) return BurstVector::max_of(cfg);
  BurstVector n(opt.bursts);
  n.check_within(cfg);
  return n;
}

std::string emit_json(const json& j) { return j.dump(2) + "\n"; }

bool want_csv(const Options& opt, bool csv_default) {
  if (opt.format.empty()) return csv_default;
  return opt.format == "csv";
}

std::vector<std::string> indexed(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

// ---------------------------------------------------------------- commands

std::string cmd_throughput(const Options& opt, spdlog::logger& log) {
  const auto scenario = scenario_or_empty(opt);
  const auto& cfg = require_wlan(scenario, "throughput");
  const auto x = attempt_from(opt, cfg);
  const auto n = bursts_from(opt, cfg);
  log.info("throughput: n={} a={}", cfg.size(), cfg.a);

  const auto s = throughput(x, n, cfg);
  const double idle = idle_probability(x);
  std::vector<double> succ(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) succ[i] = success_probability(i, x);
  const auto tau = x_to_tau(x);

  if (want_csv(opt, false)) {
    CsvTable table({"station", "x", "tau", "N", "s", "P_succ"});
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double row[] = {static_cast<double>(i + 1), x[i], tau[i], n[i], s[i], succ[i]};
      table.add_row(row);
    }
    return table.str();
  }
  return emit_json({{"x", json_numbers(x.values())},
                    {"tau", json_numbers(tau)},
                    {"N", json_numbers(n.values())},
                    {"s", json_numbers(s)},
                    {"X", json_number(x_denominator(x, n, cfg))},
                    {"P_idle", json_number(idle)},
                    {"P_succ", json_numbers(succ)},
                    {"P_collision", json_number(collision_probability(x))}});
}

std::string cmd_boundary(const Options& opt, spdlog::logger& log) {
  const auto scenario = scenario_or_empty(opt);
  const auto& cfg = require_wlan(scenario, "boundary");
  if (!opt.direction.empty() && opt.grid > 0) throw DomainError("give either --direction or --grid");

  std::vector<BoundaryPoint> points;
  if (!opt.direction.empty()) {
    points.push_back(boundary_scale(opt.direction, cfg));
  } else {
    const std::size_t k = opt.grid > 0 ? opt.grid : 101;
    points = sample_boundary(cfg, k, seed_of(opt, scenario));
  }
  log.info("boundary: {} points", points.size());

  const std::size_t n = cfg.size();
  if (want_csv(opt, true)) {
    std::vector<std::string> header;
    for (const char* p : {"y", "x", "s", "b", "alpha"}) {
      for (auto& h : indexed(p, n)) header.push_back(std::move(h));
    }
    header.insert(header.end(), {"lambda", "rhs", "h_residual"});
    CsvTable table(header);
    for (const auto& p : points) {
      const auto alpha = alpha_coefficients(p.x_star, cfg);
      std::vector<double> row;
      row.insert(row.end(), p.direction.begin(), p.direction.end());
      row.insert(row.end(), p.x_star.begin(), p.x_star.end());
      row.insert(row.end(), p.s_star.begin(), p.s_star.end());
      row.insert(row.end(), p.normal.begin(), p.normal.end());
      row.insert(row.end(), alpha.begin(), alpha.end());
      row.push_back(p.lambda_star);
      row.push_back(p.rhs);
      row.push_back(boundary_h(p.x_star, cfg) - 1.0);
      table.add_row(row);
    }
    return table.str();
  }
  auto rows = json::array();
  for (const auto& p : points) {
    rows.push_back({{"y", json_numbers(p.direction)},
                    {"x_star", json_numbers(p.x_star.values())},
                    {"s_star", json_numbers(p.s_star)},
                    {"b", json_numbers(p.normal)},
                    {"alpha", json_numbers(alpha_coefficients(p.x_star, cfg))},
                    {"lambda", json_number(p.lambda_star)},
                    {"rhs", json_number(p.rhs)},
                    {"h_residual", json_number(boundary_h(p.x_star, cfg) - 1.0)}});
  }
  return emit_json({{"points", rows}});
}

std::string cmd_subset(const Options& opt, spdlog::logger& log) {
  const auto scenario = scenario_or_empty(opt);
  const auto& cfg = require_wlan(scenario, "subset");
  const int sources = !opt.direction.empty() + !opt.x.empty() + !opt.tau.empty() + opt.symmetric;
  if (sources != 1) throw DomainError("give exactly one of --direction, --x, --tau or --symmetric");

  ConvexSubset subset;
  if (opt.symmetric) {
    subset = symmetric_subset(cfg);
  } else if (!opt.direction.empty()) {
    subset = make_subset(boundary_scale(opt.direction, cfg).x_star, cfg);
  } else {
    subset = make_subset(attempt_from(opt, cfg), cfg);
  }
  log.info("subset: generated from x* with {} stations", subset.origin_x_star.size());

  const auto s_star = throughput(subset.origin_x_star, BurstVector::max_of(cfg), cfg);
  json out = {{"x_star", json_numbers(subset.origin_x_star.values())},
              {"s_star", json_numbers(s_star)},
              {"alpha", json_numbers(subset.alpha)},
              {"bound", 1}};
  if (cfg.size() >= 2) {
    const auto plane = tangent_normal(subset.origin_x_star, cfg);
    out["b"] = json_numbers(plane.normal);
    out["rhs"] = json_number(plane.rhs);
  }
  if (!opt.point.empty()) {
    const auto membership = in_rate_region(opt.point, cfg);
    out["point"] = {{"s", json_numbers(opt.point)},
                    {"load", json_number(subset_load(opt.point, subset))},
                    {"in_subset", subset_contains(opt.point, subset)},
                    {"region", to_string(membership.verdict)},
                    {"region_lambda", json_number(membership.lambda)}};
  }
  return emit_json(out);
}

json solution_json(const NumSolution& sol) {
  return {{"rates", json_numbers(sol.rates)},
          {"objective", json_number(sol.objective)},
          {"slacks", json_numbers(sol.slacks)},
          {"multipliers", json_numbers(sol.multipliers)},
          {"kkt_residual", json_number(sol.kkt_residual)},
          {"duality_gap", json_number(sol.duality_gap)},
          {"converged", sol.converged},
          {"outer_iterations", sol.outer_iterations},
          {"newton_iterations", sol.newton_iterations}};
}

json polytope_json(const Polytope& poly) {
  auto rows = json::array();
  for (const auto& row : poly.rows) {
    rows.push_back({{"name", row.name}, {"coeff", json_numbers(row.coeff)}, {"bound", json_number(row.bound)}});
  }
  return rows;
}

std::string cmd_num(const Options& opt, spdlog::logger& log) {
  if (!opt.paper_example.empty()) {
    const auto u = scenario_utility(opt.paper_example);
    log.info("num: built-in four-clique example with {}", u.describe());
    const auto result = scenario_optimum(u);
    return emit_json({{"example", opt.paper_example},
                      {"utility", u.describe()},
                      {"x2_star", json_number(result.x2_star)},
                      {"rates", json_numbers(result.rates)},
                      {"objective", json_number(result.objective)},
                      {"evaluations", result.evaluations},
                      {"constraints", polytope_json(result.polytope)},
                      {"polytope_solution", solution_json(result.polytope_solution)}});
  }

  const auto scenario = scenario_or_empty(opt);
  if (!scenario.mesh) throw ScenarioError("$.mesh: num needs a \"mesh\" scenario or --paper-example");
  const auto& mesh = *scenario.mesh;
  const auto ops = mesh.resolve_operating_points();
  const auto poly = assemble_polytope(mesh.network, ops);
  const std::vector<Utility> utilities =
      scenario.utilities.empty() ? std::vector<Utility>{Utility::log()} : scenario.utilities;
  log.info("num: {} flows, {} cliques", poly.num_flows, poly.rows.size());
  const auto sol = solve_num(poly, utilities, scenario.weights);

  auto points = json::array();
  for (const auto& x : ops) points.push_back(json_numbers(x.values()));
  json out = solution_json(sol);
  out["flows"] = mesh.network.flows;
  out["operating_points"] = points;
  out["operating_point_rates"] = json_numbers(operating_point_rates(mesh.network, ops));
  out["constraints"] = polytope_json(poly);
  return emit_json(out);
}

std::string cmd_simulate(const Options& opt, spdlog::logger& log) {
  const auto scenario = scenario_or_empty(opt);
  const auto& cfg = require_wlan(scenario, "simulate");
  SimConfig sim;
  sim.wlan = cfg;
  sim.tau = x_to_tau(attempt_from(opt, cfg));
  sim.bursts = bursts_from(opt, cfg);
  sim.slots = opt.slots;
  sim.batches = opt.batches;
  sim.seed = seed_of(opt, scenario);
  log.info("simulate: {} slots, seed {}", sim.slots, sim.seed);

  const auto result = simulate(sim);
  const auto analytic = throughput(tau_to_x(sim.tau), sim.bursts, cfg);
  const auto zs = compare_to(result, analytic);
  std::vector<double> z(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) z[i] = zs[i].exact ? 0.0 : zs[i].z;

  if (want_csv(opt, false)) {
    CsvTable table({"station", "tau", "N", "successes", "throughput", "standard_error", "analytic", "z"});
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const double row[] = {static_cast<double>(i + 1),
                            sim.tau[i],
                            sim.bursts[i],
                            static_cast<double>(result.success_slots[i]),
                            result.throughput[i],
                            result.standard_error[i],
                            analytic[i],
                            z[i]};
      table.add_row(row);
    }
    return table.str();
  }
  std::vector<double> successes(result.success_slots.begin(), result.success_slots.end());
  return emit_json({{"slots", result.slots},
                    {"seed", sim.seed},
                    {"tau", json_numbers(sim.tau)},
                    {"N", json_numbers(sim.bursts.values())},
                    {"idle_slots", result.idle_slots},
                    {"collision_slots", result.collision_slots},
                    {"success_slots", result.success_slots},
                    {"elapsed", json_number(result.elapsed)},
                    {"delivered_bits", json_numbers(result.delivered_bits)},
                    {"throughput", json_numbers(result.throughput)},
                    {"standard_error", json_numbers(result.standard_error)},
                    {"analytic", json_numbers(analytic)},
                    {"z", json_numbers(z)}});
}

std::string cmd_verify(const Options& opt, spdlog::logger& log) {
  const auto scenario = scenario_or_empty(opt);
  const auto seed = seed_of(opt, scenario);
  SweepReport sweep;
  if (opt.suite == "convexity") {
    const auto cfg = scenario.wlan.value_or(WlanConfig::homogeneous(3, 1.0 / 9.0));
    if (cfg.size() < 2) throw BoundaryUnattainable();
    sweep = verify_convexity(cfg, opt.samples ? opt.samples : 10'000, seed);
  } else if (opt.suite == "post") {
    std::optional<std::size_t> n;
    if (scenario.wlan) n = scenario.wlan->size();
    if (n && *n < 2) throw DomainError("post suite needs n >= 2");
    sweep = verify_post(n, opt.samples ? opt.samples : 10'000, seed);
  } else {
    const auto cfg = scenario.wlan.value_or(WlanConfig::homogeneous(2, 1.0 / 9.0));
    sweep = verify_simulation(cfg, opt.samples ? opt.samples : 20, seed, opt.slots,
                              scenario.tolerances);
  }
  sweep.report["ok"] = sweep.passed;
  log.info("verify {}: {}", opt.suite, sweep.passed ? "pass" : "FAIL");
  auto text = emit_json(sweep.report);
  if (!sweep.passed) throw PropertyFailure{std::move(text)};
  return text;
}

void write_output(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw ScenarioError("cannot open output file '" + opt.out_path + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Rate-region analysis and utility optimisation for 802.11 WLANs", "wlanrr"};
  app.require_subcommand(1);
  app.add_option("--scenario", opt.scenario_path, "Scenario JSON file");
  app.add_option("--seed", opt.seed, "Random seed (overrides the scenario's)");
  app.add_option("--out", opt.out_path, "Write data to this file instead of stdout");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* throughput_cmd = app.add_subcommand("throughput", "Station throughputs s(x, N), X, P_idle");
  auto* boundary_cmd = app.add_subcommand(
      "boundary",
      "Boundary points as CSV. Columns: y_1..y_n (direction), x_1..x_n (x*), s_1..s_n (s*), "
      "b_1..b_n (tangent normal), alpha_1..alpha_n (subset coefficients), lambda, rhs, h_residual");
  auto* subset_cmd = app.add_subcommand("subset", "Maximal convex subset through a boundary point");
  auto* num_cmd = app.add_subcommand("num", "Utility maximisation over a mesh of cliques");
  auto* simulate_cmd = app.add_subcommand("simulate", "Slot-level Monte Carlo vs analytic throughput");
  auto* verify_cmd = app.add_subcommand("verify", "Run a property sweep");
  for (auto* sub : {throughput_cmd, boundary_cmd, subset_cmd, num_cmd, simulate_cmd, verify_cmd}) {
    sub->fallthrough();
  }

  auto list = [](CLI::App* sub, const char* name, std::vector<double>& target, const char* help) {
    sub->add_option(name, target, help)->delimiter(',');
  };
  for (auto* sub : {throughput_cmd, subset_cmd, simulate_cmd}) {
    list(sub, "--x", opt.x, "Attempt rates x_i = tau_i / (1 - tau_i)");
    list(sub, "--tau", opt.tau, "Attempt probabilities");
  }
  for (auto* sub : {throughput_cmd, simulate_cmd}) {
    list(sub, "--bursts", opt.bursts, "TXOP bursts N_i (default N_hi)");
  }
  for (auto* sub : {boundary_cmd, subset_cmd}) {
    list(sub, "--direction", opt.direction, "Positive direction y (normalised to sum 1)");
  }
  boundary_cmd->add_option("--grid", opt.grid, "Number of boundary points (default 101)");
  subset_cmd->add_flag("--symmetric", opt.symmetric, "Use the symmetric boundary point");
  list(subset_cmd, "--point", opt.point, "Throughput vector to classify");
  num_cmd->add_option("--paper-example", opt.paper_example, "Built-in four-clique example")
      ->check(CLI::IsMember({"log", "u1", "u2"}));
  for (auto* sub : {simulate_cmd, verify_cmd}) {
    sub->add_option("--slots", opt.slots, "MAC slots per simulation")->check(CLI::PositiveNumber);
  }
  simulate_cmd->add_option("--batches", opt.batches, "Batches for batch-means errors (>= 30)");
  verify_cmd->add_option("--suite", opt.suite, "Property sweep")
      ->required()
      ->check(CLI::IsMember({"convexity", "post", "simulate"}));
  verify_cmd->add_option("--samples", opt.samples, "Number of samples");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto log = make_logger(err);
  try {
    std::string text;
    if (throughput_cmd->parsed()) text = cmd_throughput(opt, *log);
    if (boundary_cmd->parsed()) text = cmd_boundary(opt, *log);
    if (subset_cmd->parsed()) text = cmd_subset(opt, *log);
    if (num_cmd->parsed()) text = cmd_num(opt, *log);
    if (simulate_cmd->parsed()) text = cmd_simulate(opt, *log);
    if (verify_cmd->parsed()) text = cmd_verify(opt, *log);
    write_output(opt, text, out);
    return kOk;
  } catch (const PropertyFailure& failure) {
    write_output(opt, failure.payload, out);
    log->error("property failure; witnesses are in the report");
    return kPropertyFailure;
  } catch (const PreconditionError& e) {
    log->error("{}", e.what());
    return kPreconditionError;
  } catch (const InfeasibleError& e) {
    log->error("{}", e.what());
    return kInfeasible;
  } catch (const Error& e) {
    log->error("{}", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    return kInputError;
  }
}

}  // namespace wlanrr::cli
