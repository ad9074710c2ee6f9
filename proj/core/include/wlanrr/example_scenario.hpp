#pragma once

// Built-in four-clique, three-flow mesh:
//
//   clique 1 = {flow 1}, clique 2 = {flow 1, flow 2},
//   clique 3 = {flow 2, flow 3}, clique 4 = {flow 3}
//
// with a = 1/9, TXOP burst 1 and physical rates 12 / 6 / 12 Mbps for flows
// 1 / 2 / 3. Cliques 2 and 3 share the operating point of flow 2, x2, and
// the two-station boundary x1 * x2 = a fixes x1 = x3 = a / x2.

#include <string_view>
#include <vector>

#include "wlanrr/mesh.hpp"
#include "wlanrr/num_solver.hpp"
#include "wlanrr/utility.hpp"

namespace wlanrr {

inline constexpr double kScenarioIdleRatio = 1.0 / 9.0;

MeshNetwork scenario_mesh();

/// Operating points of all four cliques for a given x2 > 0.
OperatingPointSet scenario_operating_points(double x2);

/// Flow rates (Mbps) at the boundary point selected by x2.
std::vector<double> scenario_rates(double x2);

/// sum_f U(s_f(x2)) with rates in Mbps.
double scenario_objective(double x2, const Utility& u);

/// "log", "u1" (power risk aversion alpha = 0.1, beta = 1) or
/// "u2" (alpha = 2, beta = 1). Throws DomainError on other names.
Utility scenario_utility(std::string_view name);

struct ScenarioSearch {
  double x2_min = 0.01;
  double x2_max = 3.0;
  double tolerance = 1e-5;
};

struct ScenarioResult {
  double x2_star = 0.0;
  std::vector<double> rates;  // Mbps, per flow
  double objective = 0.0;
  int evaluations = 0;
  /// Utility maximisation over the polytope built from the optimal
  /// operating points.
  Polytope polytope;
  NumSolution polytope_solution;
};

/// Scalar golden-section search over x2 maximising the summed utility of
/// the boundary throughputs, then a polytope solve at the optimum.
ScenarioResult scenario_optimum(const Utility& u, const ScenarioSearch& search = {});

}  // namespace wlanrr
