#include "wlanrr/num_solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wlanrr/convex_subsets.hpp"
#include "wlanrr/error.hpp"
#include "wlanrr/mesh.hpp"
#include "wlanrr/example_scenario.hpp"
#include "wlanrr/sampling.hpp"

namespace wlanrr {
namespace {

Polytope single_row(std::vector<double> coeff, double bound = 1.0) {
  Polytope p;
  p.num_flows = coeff.size();
  p.rows.push_back({"row", std::move(coeff), bound});
  return p;
}

const std::vector<Utility> kLog = {Utility::log()};

TEST(SolveNum, SingleFlowSaturates) {
  const auto sol = solve_num(single_row({4.0}), kLog);
  EXPECT_TRUE(sol.converged);
  EXPECT_NEAR(sol.rates[0], 0.25, 1e-8);
  EXPECT_LE(sol.kkt_residual, 1e-8);
}

TEST(SolveNum, TwoLogFlowsSplitCapacity) {
  // s1 + s2 <= c  written as (1/c) s1 + (1/c) s2 <= 1.
  const double c = 3.0;
  const auto sol = solve_num(single_row({1.0 / c, 1.0 / c}), kLog);
  EXPECT_NEAR(sol.rates[0], c / 2.0, 1e-7);
  EXPECT_NEAR(sol.rates[1], c / 2.0, 1e-7);
  EXPECT_NEAR(sol.objective, 2.0 * std::log(c / 2.0), 1e-7);
}

TEST(SolveNum, LogUtilitiesEqualiseLoadShares) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 6));
    std::vector<double> alpha(n);
    for (auto& v : alpha) v = rng.uniform(0.2, 5.0);
    const auto sol = solve_num(single_row(alpha), kLog);
    ASSERT_TRUE(sol.converged);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(alpha[i] * sol.rates[i], 1.0 / static_cast<double>(n), 1e-7);
    }
  }
}

TEST(SolveNum, WeightedLogSharesFollowWeights) {
  const std::vector<double> weights = {1.0, 3.0};
  const auto sol = solve_num(single_row({1.0, 1.0}), kLog, weights);
  EXPECT_NEAR(sol.rates[0], 0.25, 1e-7);
  EXPECT_NEAR(sol.rates[1], 0.75, 1e-7);
}

TEST(SolveNum, TwoRowsBottleneck) {
  // s1 + s2 <= 1, s2 + s3 <= 1: PF gives s2 = 1/3, s1 = s3 = 2/3.
  Polytope p;
  p.num_flows = 3;
  p.rows.push_back({"a", {1.0, 1.0, 0.0}, 1.0});
  p.rows.push_back({"b", {0.0, 1.0, 1.0}, 1.0});
  const auto sol = solve_num(p, kLog);
  EXPECT_NEAR(sol.rates[0], 2.0 / 3.0, 1e-7);
  EXPECT_NEAR(sol.rates[1], 1.0 / 3.0, 1e-7);
  EXPECT_NEAR(sol.rates[2], 2.0 / 3.0, 1e-7);
  EXPECT_NEAR(sol.multipliers[0], 1.5, 1e-5);
  EXPECT_NEAR(sol.multipliers[1], 1.5, 1e-5);
}

TEST(SolveNum, ScaleInvariance) {
  Polytope p;
  p.num_flows = 3;
  p.rows.push_back({"a", {0.5, 2.0, 0.0}, 1.0});
  p.rows.push_back({"b", {0.0, 1.0, 3.0}, 1.0});
  auto q = p;
  for (auto& v : q.rows[0].coeff) v *= 7.0;
  q.rows[0].bound *= 7.0;
  const std::vector<Utility> u = {Utility::iso_elastic(2.0)};
  const auto sp = solve_num(p, u);
  const auto sq = solve_num(q, u);
  for (std::size_t f = 0; f < 3; ++f) EXPECT_NEAR(sp.rates[f], sq.rates[f], 1e-7);
}

TEST(SolveNum, NonLogUtilities) {
  // alpha-fair with alpha = 2 on s1 + 4 s2 <= 1: s_i^-2 = lambda c_i.
  const std::vector<Utility> u = {Utility::iso_elastic(2.0)};
  const auto sol = solve_num(single_row({1.0, 4.0}), u);
  // s1 / s2 = sqrt(c2 / c1) = 2 and s1 + 4 s2 = 1.
  EXPECT_NEAR(sol.rates[0], 1.0 / 3.0, 1e-7);
  EXPECT_NEAR(sol.rates[1], 1.0 / 6.0, 1e-7);

  const std::vector<Utility> mixed = {Utility::power_risk_aversion(0.1, 1.0),
                                      Utility::power_risk_aversion(2.0, 1.0)};
  const auto m = solve_num(single_row({1.0 / 6.0, 1.0 / 6.0}), mixed);
  EXPECT_TRUE(m.converged);
  EXPECT_LE(m.kkt_residual, 1e-8);
  EXPECT_NEAR(m.rates[0] + m.rates[1], 6.0, 1e-6);
}

TEST(SolveNum, Errors) {
  EXPECT_THROW(solve_num(single_row({1.0, 1.0}, 0.0), kLog), InfeasibleError);
  EXPECT_THROW(solve_num(single_row({1.0, 1.0}, -1.0), kLog), InfeasibleError);
  EXPECT_THROW(solve_num(single_row({1.0, 0.0}), kLog), InfeasibleError);
  EXPECT_THROW(solve_num(single_row({1.0, -1.0}), kLog), DomainError);
  const std::vector<Utility> two = {Utility::log(), Utility::log()};
  EXPECT_THROW(solve_num(single_row({1.0, 1.0, 1.0}), two), DimensionError);
  const std::vector<double> bad_weights = {1.0, -1.0};
  EXPECT_THROW(solve_num(single_row({1.0, 1.0}), kLog, bad_weights), DomainError);
}

TEST(Polytope, AssembledFromOperatingPoints) {
  const auto mesh = scenario_mesh();
  const double x2 = 0.25;
  const auto ops = scenario_operating_points(x2);
  const auto p = assemble_polytope(mesh, ops);
  ASSERT_EQ(p.rows.size(), 4u);
  ASSERT_EQ(p.num_flows, 3u);
  // Single-flow cliques cap the flow at its physical rate.
  EXPECT_DOUBLE_EQ(p.rows[0].coeff[0], 1.0 / 12.0);
  EXPECT_DOUBLE_EQ(p.rows[0].coeff[1], 0.0);
  // Two-station clique: alpha_i = prod_{j != i} (1 + x_j), divided by rate.
  const double x1 = kScenarioIdleRatio / x2;
  EXPECT_NEAR(p.rows[1].coeff[0], (1.0 + x2) / 12.0, 1e-14);
  EXPECT_NEAR(p.rows[1].coeff[1], (1.0 + x1) / 6.0, 1e-14);
  EXPECT_DOUBLE_EQ(p.rows[1].coeff[2], 0.0);

  // The boundary rates lie on the faces of cliques 2 and 3.
  const auto rates = scenario_rates(x2);
  for (std::size_t c = 1; c <= 2; ++c) {
    double load = 0.0;
    for (std::size_t f = 0; f < 3; ++f) load += p.rows[c].coeff[f] * rates[f];
    EXPECT_NEAR(load, 1.0, 1e-12);
  }
  auto bad = ops;
  bad[1] = AttemptVector{0.5, 0.5};
  EXPECT_THROW(assemble_polytope(mesh, bad), PreconditionError);
}

TEST(Scenario, RatesAtOperatingPoint) {
  // Oracle: two-station throughput by enumeration, scaled to Mbps.
  const double a = kScenarioIdleRatio;
  const double x2 = 0.3;
  const double x1 = a / x2;
  const auto e = testing::enumerate_slots({x1 / (1 + x1), x2 / (1 + x2)}, {1.0, 1.0},
                                          {1.0, 1.0}, a);
  const auto rates = scenario_rates(x2);
  EXPECT_NEAR(rates[0], 12.0 * e.throughput[0], 1e-12);
  EXPECT_NEAR(rates[1], 6.0 * e.throughput[1], 1e-12);
  EXPECT_NEAR(rates[2], rates[0], 1e-12);
}

TEST(Scenario, LogOptimumClosedForm) {
  // With a = 1/9, rates are 12 a / X, 6 x2 / X, 12 a / X with
  // X = 2a + a / x2 + x2, so the summed log utility is maximised at
  // 2 x2^2 + a x2 - a = 0.
  const double a = kScenarioIdleRatio;
  const double x2 = (-a + std::sqrt(a * a + 8.0 * a)) / 4.0;
  const double numeric = testing::argmax_scalar(
      [&](double v) { return scenario_objective(v, Utility::log()); }, 0.01, 3.0);
  EXPECT_NEAR(numeric, x2, 1e-6);

  const auto mesh = scenario_mesh();
  const auto p = assemble_polytope(mesh, scenario_operating_points(x2));
  const auto sol = solve_num(p, kLog);
  const auto boundary = scenario_rates(x2);
  ASSERT_TRUE(sol.converged);
  for (std::size_t f = 0; f < 3; ++f) EXPECT_NEAR(sol.rates[f], boundary[f], 1e-6) << f;
}

TEST(Scenario, ObjectiveUnimodalOnSearchInterval) {
  for (const char* name : {"log", "u1", "u2"}) {
    const auto u = scenario_utility(name);
    const int grid = 3000;
    std::vector<double> values(grid + 1);
    std::size_t best = 0;
    for (int k = 0; k <= grid; ++k) {
      values[k] = scenario_objective(0.01 + (3.0 - 0.01) * k / grid, u);
      if (values[k] > values[best]) best = static_cast<std::size_t>(k);
    }
    for (std::size_t k = 1; k <= best; ++k) EXPECT_GE(values[k], values[k - 1]) << name;
    for (std::size_t k = best + 1; k < values.size(); ++k) EXPECT_LE(values[k], values[k - 1]) << name;
    const double grid_x = 0.01 + (3.0 - 0.01) * static_cast<double>(best) / grid;
    const auto result = scenario_optimum(u);
    EXPECT_NEAR(result.x2_star, grid_x, 2.0 * (3.0 - 0.01) / grid) << name;
  }
}

TEST(Scenario, ReportedOptima) {
  const struct {
    const char* name;
    double x2;
  } cases[] = {{"log", 0.2094}, {"u1", 0.3767}, {"u2", 0.3516}};
  for (const auto& c : cases) {
    const auto result = scenario_optimum(scenario_utility(c.name));
    EXPECT_NEAR(result.x2_star, c.x2, 2e-3) << c.name;
    EXPECT_TRUE(result.polytope_solution.converged) << c.name;
  }
  EXPECT_THROW(scenario_utility("u3"), DomainError);
}

TEST(GoldenSection, FindsQuadraticPeak) {
  int evals = 0;
  const double x = golden_section_maximize([](double v) { return -(v - 0.7) * (v - 0.7); }, 0.0,
                                           2.0, 1e-8, &evals);
  EXPECT_NEAR(x, 0.7, 1e-8);
  EXPECT_GT(evals, 10);
  EXPECT_LT(evals, 100);
}

}  // namespace
}  // namespace wlanrr
