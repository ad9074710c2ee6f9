#pragma once

// Mesh networks of WLAN cliques and the polytope obtained by intersecting
// one maximal convex subset per clique.

#include <cstddef>
#include <string>
#include <vector>

#include "wlanrr/wlan_model.hpp"

namespace wlanrr {

/// A clique: a set of flows that mutually contend. Each active flow has a
/// physical rate L/T_c (Mbps) and a maximum TXOP burst in this clique.
struct Clique {
  std::string name;
  double a = 1.0;
  std::vector<std::size_t> flows;  // indices into MeshNetwork::flows, ordered
  std::vector<double> rate_mbps;   // one per active flow
  std::vector<int> burst_max;      // one per active flow

  std::size_t size() const { return flows.size(); }
};

struct MeshNetwork {
  std::vector<std::string> flows;
  std::vector<Clique> cliques;

  /// Throws DomainError unless every clique has >= 1 flow, every flow is
  /// active in >= 1 clique, indices are valid and rates positive.
  void validate() const;

  /// Normalised WLAN of clique c: payload 1 per station, bursts [1, burst_max].
  /// Throughputs in this configuration multiply by rate_mbps to give Mbps.
  WlanConfig clique_config(std::size_t c) const;
};

/// One boundary attempt vector per clique, over that clique's active flows.
/// Single-flow cliques have no attained boundary; their entry is ignored.
using OperatingPointSet = std::vector<AttemptVector>;

/// Throws PreconditionError if some clique with >= 2 flows has
/// |h_c(x_c) - 1| > 1e-8, DimensionError on size mismatches.
void validate_operating_points(const MeshNetwork& mesh, const OperatingPointSet& ops);

/// Boundary operating point of every clique along the uniform direction.
OperatingPointSet uniform_operating_points(const MeshNetwork& mesh);

/// sum_f coeff[f] * s_f <= bound, over all flows of the network.
struct LinearConstraint {
  std::string name;
  std::vector<double> coeff;
  double bound = 1.0;
};

struct Polytope {
  std::size_t num_flows = 0;
  std::vector<LinearConstraint> rows;
};

/// One row per clique: sum_{f in c} alpha_{f,c} s_f / rate_{f,c} <= 1 with
/// s_f in Mbps and alpha from the clique's operating point.
Polytope assemble_polytope(const MeshNetwork& mesh, const OperatingPointSet& ops);

/// Flow rates (Mbps) produced by the operating points: the minimum over the
/// cliques in which each flow is active of its boundary throughput.
std::vector<double> operating_point_rates(const MeshNetwork& mesh,
                                          const OperatingPointSet& ops);

}  // namespace wlanrr
