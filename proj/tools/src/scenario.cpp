#include "wlanrr_cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>

#include "wlanrr/rate_region.hpp"

namespace wlanrr::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ScenarioError(path + ": " + what);
}

void require_object(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return key == k; });
    if (!known) fail(path + "." + key, "unknown key");
  }
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) fail(path, std::string("missing required key '") + key + "'");
  return j.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<double> numbers(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> integers(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<double>> number_rows(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of arrays");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(numbers(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

template <typename F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

WlanConfig parse_wlan(const json& j, const std::string& path) {
  require_object(j, path, {"n", "a", "L", "N_lo", "N_hi"});
  const int n = integer(member(j, path, "n"), path + ".n");
  if (n < 1) fail(path + ".n", "station count must be >= 1");
  const auto size = static_cast<std::size_t>(n);

  WlanConfig cfg;
  cfg.a = number(member(j, path, "a"), path + ".a");
  cfg.payload = j.contains("L") ? numbers(j["L"], path + ".L") : std::vector<double>(size, 1.0);
  cfg.burst_min = j.contains("N_lo") ? integers(j["N_lo"], path + ".N_lo") : std::vector<int>(size, 1);
  cfg.burst_max = j.contains("N_hi") ? integers(j["N_hi"], path + ".N_hi") : cfg.burst_min;
  for (const auto& [key, len] : {std::pair{"L", cfg.payload.size()},
                                 std::pair{"N_lo", cfg.burst_min.size()},
                                 std::pair{"N_hi", cfg.burst_max.size()}}) {
    if (len != size) fail(path + "." + key, "expected " + std::to_string(n) + " entries");
  }
  if (!(cfg.a > 0.0)) fail(path + ".a", "must be > 0");
  for (std::size_t i = 0; i < size; ++i) {
    const std::string at = "[" + std::to_string(i) + "]";
    if (!(cfg.payload[i] > 0.0)) fail(path + ".L" + at, "must be > 0");
    if (cfg.burst_min[i] < 1) fail(path + ".N_lo" + at, "must be >= 1");
    if (cfg.burst_max[i] < cfg.burst_min[i]) fail(path + ".N_hi" + at, "must be >= N_lo");
  }
  guarded(path, [&] {
    cfg.validate();
    return 0;
  });
  return cfg;
}

Utility parse_utility(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a utility object");
  const auto& fam = member(j, path, "family");
  if (!fam.is_string()) fail(path + ".family", "expected a string");
  const auto family = fam.get<std::string>();
  auto param = [&](const char* key) { return number(member(j, path, key), path + "." + key); };
  return guarded(path, [&]() -> Utility {
    if (family == "log") {
      require_object(j, path, {"family"});
      return Utility::log();
    }
    if (family == "iso-elastic") {
      require_object(j, path, {"family", "alpha"});
      return Utility::iso_elastic(param("alpha"));
    }
    if (family == "hara") {
      require_object(j, path, {"family", "alpha", "beta", "gamma"});
      return Utility::hara(param("alpha"), param("beta"), param("gamma"));
    }
    if (family == "lin-exp") {
      require_object(j, path, {"family", "alpha", "beta"});
      return Utility::lin_exp(param("alpha"), param("beta"));
    }
    if (family == "power-risk-aversion") {
      require_object(j, path, {"family", "alpha", "beta"});
      return Utility::power_risk_aversion(param("alpha"), param("beta"));
    }
    fail(path + ".family", "unknown utility family '" + family + "'");
  });
}

MeshScenario parse_mesh(const json& j, const std::string& path) {
  require_object(j, path,
                 {"flows", "cliques", "incidence", "rates_mbps", "operating_points", "directions"});
  MeshScenario out;
  auto& mesh = out.network;

  const auto& flows = member(j, path, "flows");
  if (!flows.is_array() || flows.empty()) fail(path + ".flows", "expected a nonempty array of names");
  for (std::size_t f = 0; f < flows.size(); ++f) {
    if (!flows[f].is_string()) fail(path + ".flows[" + std::to_string(f) + "]", "expected a string");
    mesh.flows.push_back(flows[f].get<std::string>());
  }

  const auto& cliques = member(j, path, "cliques");
  const auto& incidence = member(j, path, "incidence");
  const auto rates = number_rows(member(j, path, "rates_mbps"), path + ".rates_mbps");
  if (!cliques.is_array() || cliques.empty()) fail(path + ".cliques", "expected a nonempty array");
  if (!incidence.is_array() || incidence.size() != cliques.size()) {
    fail(path + ".incidence", "expected one flow list per clique");
  }
  if (rates.size() != cliques.size()) fail(path + ".rates_mbps", "expected one rate list per clique");

  for (std::size_t c = 0; c < cliques.size(); ++c) {
    const std::string cpath = path + ".cliques[" + std::to_string(c) + "]";
    const std::string ipath = path + ".incidence[" + std::to_string(c) + "]";
    require_object(cliques[c], cpath, {"name", "a", "N_hi"});
    Clique clique;
    clique.name = cliques[c].contains("name") && cliques[c]["name"].is_string()
                      ? cliques[c]["name"].get<std::string>()
                      : "clique" + std::to_string(c + 1);
    clique.a = number(member(cliques[c], cpath, "a"), cpath + ".a");

    const auto& members = incidence[c];
    if (!members.is_array()) fail(ipath, "expected an array of flow names");
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::string mpath = ipath + "[" + std::to_string(k) + "]";
      if (!members[k].is_string()) fail(mpath, "expected a flow name");
      const auto name = members[k].get<std::string>();
      const auto it = std::find(mesh.flows.begin(), mesh.flows.end(), name);
      if (it == mesh.flows.end()) fail(mpath, "unknown flow '" + name + "'");
      clique.flows.push_back(static_cast<std::size_t>(it - mesh.flows.begin()));
    }
    clique.rate_mbps = rates[c];
    if (clique.rate_mbps.size() != clique.flows.size()) {
      fail(path + ".rates_mbps[" + std::to_string(c) + "]", "expected one rate per active flow");
    }
    clique.burst_max = cliques[c].contains("N_hi") ? integers(cliques[c]["N_hi"], cpath + ".N_hi")
                                                   : std::vector<int>(clique.flows.size(), 1);
    if (clique.burst_max.size() != clique.flows.size()) {
      fail(cpath + ".N_hi", "expected one burst per active flow");
    }
    mesh.cliques.push_back(std::move(clique));
  }
  guarded(path, [&] {
    mesh.validate();
    return 0;
  });

  if (j.contains("operating_points") && j.contains("directions")) {
    fail(path, "give either operating_points or directions, not both");
  }
  auto check_rows = [&](const std::vector<std::vector<double>>& rows, const std::string& key) {
    if (rows.size() != mesh.cliques.size()) fail(path + "." + key, "expected one row per clique");
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (rows[c].size() != mesh.cliques[c].size()) {
        fail(path + "." + key + "[" + std::to_string(c) + "]", "expected one entry per active flow");
      }
    }
  };
  if (j.contains("operating_points")) {
    out.operating_points = number_rows(j["operating_points"], path + ".operating_points");
    check_rows(*out.operating_points, "operating_points");
  }
  if (j.contains("directions")) {
    out.directions = number_rows(j["directions"], path + ".directions");
    check_rows(*out.directions, "directions");
  }
  guarded(path, [&] {
    validate_operating_points(mesh, out.resolve_operating_points());
    return 0;
  });
  return out;
}

}  // namespace

OperatingPointSet MeshScenario::resolve_operating_points() const {
  if (operating_points) {
    OperatingPointSet ops;
    for (const auto& row : *operating_points) ops.emplace_back(row);
    return ops;
  }
  if (directions) {
    OperatingPointSet ops;
    for (std::size_t c = 0; c < network.cliques.size(); ++c) {
      if (network.cliques[c].size() < 2) {
        ops.emplace_back(std::vector<double>(network.cliques[c].size(), 0.0));
      } else {
        ops.push_back(boundary_scale((*directions)[c], network.clique_config(c)).x_star);
      }
    }
    return ops;
  }
  return uniform_operating_points(network);
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("$: malformed JSON: ") + e.what());
  }
  require_object(doc, "$", {"wlan", "mesh", "utilities", "weights", "seed", "tolerances"});

  Scenario s;
  if (doc.contains("wlan")) s.wlan = parse_wlan(doc["wlan"], "$.wlan");
  if (doc.contains("mesh")) s.mesh = parse_mesh(doc["mesh"], "$.mesh");

  if (doc.contains("utilities")) {
    const auto& u = doc["utilities"];
    if (u.is_array()) {
      for (std::size_t f = 0; f < u.size(); ++f) {
        s.utilities.push_back(parse_utility(u[f], "$.utilities[" + std::to_string(f) + "]"));
      }
    } else {
      s.utilities.push_back(parse_utility(u, "$.utilities"));
    }
    if (s.mesh && s.utilities.size() != 1 && s.utilities.size() != s.mesh->network.flows.size()) {
      fail("$.utilities", "expected one utility, or one per flow");
    }
  }
  if (doc.contains("weights")) {
    s.weights = numbers(doc["weights"], "$.weights");
    if (s.mesh && s.weights.size() != s.mesh->network.flows.size()) {
      fail("$.weights", "expected one weight per flow");
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("$.seed", "expected a nonnegative integer");
    s.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    require_object(t, "$.tolerances", {"z_max", "pass_fraction"});
    if (t.contains("z_max")) s.tolerances.z_max = number(t["z_max"], "$.tolerances.z_max");
    if (t.contains("pass_fraction")) {
      s.tolerances.pass_fraction = number(t["pass_fraction"], "$.tolerances.pass_fraction");
    }
    if (!(s.tolerances.z_max > 0.0)) fail("$.tolerances.z_max", "must be > 0");
    if (!(s.tolerances.pass_fraction > 0.0 && s.tolerances.pass_fraction <= 1.0)) {
      fail("$.tolerances.pass_fraction", "must lie in (0, 1]");
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("$: cannot open scenario file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

}  // namespace wlanrr::cli
