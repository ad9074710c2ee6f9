#pragma once

// Scenario files: JSON documents describing a WLAN or a mesh of cliques,
// optional flow utilities, a seed and verification tolerances.
//
//   {
//     "wlan": {"n": 2, "a": 0.111, "L": [1, 1], "N_lo": [1, 1], "N_hi": [1, 1]},
//     "mesh": {
//       "flows": ["f1", "f2"],
//       "cliques": [{"name": "c1", "a": 0.111, "N_hi": [1, 1]}],
//       "incidence": [["f1", "f2"]],
//       "rates_mbps": [[12, 6]],
//       "operating_points": [[0.333, 0.333]]      (or "directions")
//     },
//     "utilities": {"family": "log"}              (or one object per flow)
//     "weights": [1, 1],
//     "seed": 7,
//     "tolerances": {"z_max": 3, "pass_fraction": 0.95}
//   }
//
// Unknown keys are rejected with the JSON path of the offending key.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlanrr/error.hpp"
#include "wlanrr/mesh.hpp"
#include "wlanrr/utility.hpp"
#include "wlanrr/wlan_model.hpp"

namespace wlanrr::cli {

/// Schema violation in a scenario document; the message starts with the
/// JSON path ("$.wlan.L[1]: ...").
class ScenarioError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct MeshScenario {
  MeshNetwork network;
  std::optional<std::vector<std::vector<double>>> operating_points;
  std::optional<std::vector<std::vector<double>>> directions;

  /// Operating points from the file, from directions, or the uniform
  /// direction per clique.
  OperatingPointSet resolve_operating_points() const;
};

struct Tolerances {
  double z_max = 3.0;
  double pass_fraction = 0.95;
};

struct Scenario {
  std::optional<WlanConfig> wlan;
  std::optional<MeshScenario> mesh;
  std::vector<Utility> utilities;  // empty, one shared, or one per flow
  std::vector<double> weights;
  std::optional<std::uint64_t> seed;
  Tolerances tolerances;
};

/// Parse and validate a scenario document. Throws ScenarioError on schema
/// or domain violations.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

}  // namespace wlanrr::cli
