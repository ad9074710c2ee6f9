#include "wlanrr/example_scenario.hpp"

#include <string>

#include "wlanrr/error.hpp"

namespace wlanrr {

MeshNetwork scenario_mesh() {
  MeshNetwork mesh;
  mesh.flows = {"flow1", "flow2", "flow3"};
  const double a = kScenarioIdleRatio;
  mesh.cliques = {
      {"clique1", a, {0}, {12.0}, {1}},
      {"clique2", a, {0, 1}, {12.0, 6.0}, {1, 1}},
      {"clique3", a, {1, 2}, {6.0, 12.0}, {1, 1}},
      {"clique4", a, {2}, {12.0}, {1}},
  };
  return mesh;
}

OperatingPointSet scenario_operating_points(double x2) {
  if (!(x2 > 0.0)) throw DomainError("x2 must be > 0");
  const double x1 = kScenarioIdleRatio / x2;
  return {
      AttemptVector{0.0},
      AttemptVector{x1, x2},
      AttemptVector{x2, x1},
      AttemptVector{0.0},
  };
}

std::vector<double> scenario_rates(double x2) {
  static const MeshNetwork mesh = scenario_mesh();
  return operating_point_rates(mesh, scenario_operating_points(x2));
}

double scenario_objective(double x2, const Utility& u) {
  double total = 0.0;
  for (double s : scenario_rates(x2)) total += u.value(s);
  return total;
}

Utility scenario_utility(std::string_view name) {
  if (name == "log") return Utility::log();
  if (name == "u1") return Utility::power_risk_aversion(0.1, 1.0);
  if (name == "u2") return Utility::power_risk_aversion(2.0, 1.0);
  throw DomainError("unknown scenario utility '" + std::string(name) + "' (log, u1, u2)");
}

ScenarioResult scenario_optimum(const Utility& u, const ScenarioSearch& search) {
  ScenarioResult result;
  result.x2_star = golden_section_maximize(
      [&](double x2) { return scenario_objective(x2, u); }, search.x2_min, search.x2_max,
      search.tolerance, &result.evaluations);
  result.rates = scenario_rates(result.x2_star);
  result.objective = scenario_objective(result.x2_star, u);

  const MeshNetwork mesh = scenario_mesh();
  result.polytope = assemble_polytope(mesh, scenario_operating_points(result.x2_star));
  const Utility shared[] = {u};
  result.polytope_solution = solve_num(result.polytope, shared);
  return result;
}

}  // namespace wlanrr
