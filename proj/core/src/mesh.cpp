#include "wlanrr/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wlanrr/convex_subsets.hpp"
#include "wlanrr/error.hpp"
#include "wlanrr/rate_region.hpp"
#include "wlanrr/tolerances.hpp"

namespace wlanrr {

void MeshNetwork::validate() const {
  if (flows.empty()) throw DomainError("mesh needs at least one flow");
  if (cliques.empty()) throw DomainError("mesh needs at least one clique");
  std::vector<bool> seen(flows.size(), false);
  for (const auto& clique : cliques) {
    const std::string where = "clique '" + clique.name + "'";
    if (clique.flows.empty()) throw DomainError(where + " has no active flow");
    if (clique.rate_mbps.size() != clique.flows.size() ||
        clique.burst_max.size() != clique.flows.size()) {
      throw DimensionError(where + ": rates and bursts must match its flow list");
    }
    if (!(clique.a > 0.0) || !std::isfinite(clique.a)) {
      throw DomainError(where + ": a must be finite and > 0");
    }
    for (std::size_t k = 0; k < clique.flows.size(); ++k) {
      const auto f = clique.flows[k];
      if (f >= flows.size()) throw DomainError(where + ": flow index out of range");
      if (std::count(clique.flows.begin(), clique.flows.end(), f) > 1) {
        throw DomainError(where + ": flow '" + flows[f] + "' listed twice");
      }
      if (!(clique.rate_mbps[k] > 0.0) || !std::isfinite(clique.rate_mbps[k])) {
        throw DomainError(where + ": rates must be finite and > 0");
      }
      if (clique.burst_max[k] < 1) throw DomainError(where + ": bursts must be >= 1");
      seen[f] = true;
    }
  }
  for (std::size_t f = 0; f < flows.size(); ++f) {
    if (!seen[f]) throw DomainError("flow '" + flows[f] + "' is not active in any clique");
  }
}

WlanConfig MeshNetwork::clique_config(std::size_t c) const {
  const auto& clique = cliques.at(c);
  WlanConfig cfg;
  cfg.a = clique.a;
  cfg.payload.assign(clique.size(), 1.0);
  cfg.burst_min.assign(clique.size(), 1);
  cfg.burst_max = clique.burst_max;
  cfg.validate();
  return cfg;
}

void validate_operating_points(const MeshNetwork& mesh, const OperatingPointSet& ops) {
  if (ops.size() != mesh.cliques.size()) {
    throw DimensionError("need one operating point per clique");
  }
  for (std::size_t c = 0; c < ops.size(); ++c) {
    const auto& clique = mesh.cliques[c];
    if (clique.size() < 2) continue;
    if (ops[c].size() != clique.size()) {
      throw DimensionError("operating point of clique '" + clique.name +
                           "' does not match its flow count");
    }
    const double residual = std::abs(boundary_h(ops[c], clique.a) - 1.0);
    if (residual > tol::kOnBoundary) {
      throw PreconditionError("operating point of clique '" + clique.name +
                              "' is off the boundary (|h - 1| = " +
                              std::to_string(residual) + ")");
    }
  }
}

OperatingPointSet uniform_operating_points(const MeshNetwork& mesh) {
  mesh.validate();
  OperatingPointSet ops;
  ops.reserve(mesh.cliques.size());
  for (std::size_t c = 0; c < mesh.cliques.size(); ++c) {
    const auto n = mesh.cliques[c].size();
    if (n < 2) {
      ops.emplace_back(std::vector<double>(n, 0.0));
      continue;
    }
    const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
    ops.push_back(boundary_scale(uniform, mesh.clique_config(c)).x_star);
  }
  return ops;
}

Polytope assemble_polytope(const MeshNetwork& mesh, const OperatingPointSet& ops) {
  mesh.validate();
  validate_operating_points(mesh, ops);
  Polytope poly;
  poly.num_flows = mesh.flows.size();
  for (std::size_t c = 0; c < mesh.cliques.size(); ++c) {
    const auto& clique = mesh.cliques[c];
    const auto cfg = mesh.clique_config(c);
    const AttemptVector x = clique.size() < 2 ? AttemptVector(std::vector<double>(1, 0.0)) : ops[c];
    const auto alpha = alpha_coefficients(x, cfg);
    LinearConstraint row;
    row.name = clique.name;
    row.coeff.assign(poly.num_flows, 0.0);
    for (std::size_t k = 0; k < clique.size(); ++k) {
      row.coeff[clique.flows[k]] = alpha[k] / clique.rate_mbps[k];
    }
    poly.rows.push_back(std::move(row));
  }
  return poly;
}

std::vector<double> operating_point_rates(const MeshNetwork& mesh,
                                          const OperatingPointSet& ops) {
  mesh.validate();
  validate_operating_points(mesh, ops);
  std::vector<double> rates(mesh.flows.size(), std::numeric_limits<double>::infinity());
  for (std::size_t c = 0; c < mesh.cliques.size(); ++c) {
    const auto& clique = mesh.cliques[c];
    if (clique.size() < 2) {
      // Supremum of a lone flow: the full physical rate.
      rates[clique.flows[0]] = std::min(rates[clique.flows[0]], clique.rate_mbps[0]);
      continue;
    }
    const auto cfg = mesh.clique_config(c);
    const auto s = throughput(ops[c], BurstVector::max_of(cfg), cfg);
    for (std::size_t k = 0; k < clique.size(); ++k) {
      auto& rate = rates[clique.flows[k]];
      rate = std::min(rate, s[k] * clique.rate_mbps[k]);
    }
  }
  return rates;
}

}  // namespace wlanrr
