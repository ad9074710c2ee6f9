#include "wlanrr_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wlanrr/convex_subsets.hpp"
#include "wlanrr/mac_simulator.hpp"
#include "wlanrr/rate_region.hpp"
#include "wlanrr/sampling.hpp"
#include "wlanrr_cli/format.hpp"

namespace wlanrr::cli {

namespace {

constexpr std::size_t kMaxWitnesses = 10;

}  // namespace

SweepReport verify_convexity(const WlanConfig& cfg, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = cfg.size();
  std::size_t failed = 0;
  double worst = std::numeric_limits<double>::infinity();
  auto witnesses = nlohmann::json::array();
  for (std::size_t k = 0; k < samples; ++k) {
    const auto p = boundary_scale(sample_simplex(rng, n), cfg);
    const auto q = boundary_scale(sample_simplex(rng, n), cfg);
    const double margin = complement_convexity_margin(p.x_star, q.x_star, cfg);
    worst = std::min(worst, margin);
    if (!(margin > 0.0)) {
      ++failed;
      if (witnesses.size() < kMaxWitnesses) {
        witnesses.push_back({{"sample", k},
                             {"x_star", json_numbers(p.x_star.values())},
                             {"y_star", json_numbers(q.x_star.values())},
                             {"margin", json_number(margin)}});
      }
    }
  }
  SweepReport out;
  out.passed = failed == 0;
  out.report = {{"suite", "convexity"},   {"n", n},
                {"a", json_number(cfg.a)}, {"samples", samples},
                {"seed", seed},           {"passed", samples - failed},
                {"failed", failed},       {"worst_margin", json_number(worst)},
                {"failures", witnesses}};
  return out;
}

SweepReport verify_post(std::optional<std::size_t> n, std::size_t samples, std::uint64_t seed,
                        std::size_t max_n) {
  Rng rng(seed);
  std::size_t failed = 0;
  double worst = -std::numeric_limits<double>::infinity();
  auto witnesses = nlohmann::json::array();
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t dim = n ? *n : 2 + k % (max_n - 1);
    const auto pair = sample_post_pair(rng, dim);
    const double sum = post_inequality_check(pair.r, pair.z);
    worst = std::max(worst, sum);
    if (!(sum < 0.0)) {
      ++failed;
      if (witnesses.size() < kMaxWitnesses) {
        witnesses.push_back({{"sample", k},
                             {"r", json_numbers(pair.r)},
                             {"z", json_numbers(pair.z)},
                             {"sum", json_number(sum)}});
      }
    }
  }
  SweepReport out;
  out.passed = failed == 0;
  out.report = {{"suite", "post"},         {"samples", samples},
                {"seed", seed},            {"passed", samples - failed},
                {"failed", failed},        {"worst_sum", json_number(worst)},
                {"failures", witnesses}};
  return out;
}

SweepReport verify_simulation(const WlanConfig& cfg, std::size_t samples, std::uint64_t seed,
                              std::uint64_t slots, const Tolerances& tolerances) {
  Rng rng(seed);
  const std::size_t n = cfg.size();
  std::size_t stations = 0;
  std::size_t within = 0;
  double worst = 0.0;
  auto witnesses = nlohmann::json::array();
  for (std::size_t k = 0; k < samples; ++k) {
    SimConfig sim;
    sim.wlan = cfg;
    sim.tau.resize(n);
    std::vector<double> bursts(n);
    for (std::size_t i = 0; i < n; ++i) {
      sim.tau[i] = rng.uniform(0.01, 0.5);
      bursts[i] = rng.integer(cfg.burst_min[i], cfg.burst_max[i]);
    }
    sim.bursts = BurstVector(bursts);
    sim.slots = slots;
    sim.seed = mix_seed(seed, k);
    const auto zs = compare_to_model(sim);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      ++stations;
      const double z = zs[i].exact ? 0.0 : zs[i].z;
      worst = std::max(worst, std::abs(z));
      if (std::abs(z) <= tolerances.z_max) {
        ++within;
      } else if (witnesses.size() < kMaxWitnesses) {
        witnesses.push_back({{"sample", k},
                             {"station", i},
                             {"tau", json_numbers(sim.tau)},
                             {"bursts", json_numbers(bursts)},
                             {"simulated", json_number(zs[i].simulated)},
                             {"analytic", json_number(zs[i].analytic)},
                             {"standard_error", json_number(zs[i].standard_error)},
                             {"z", json_number(z)}});
      }
    }
  }
  const double fraction = stations ? static_cast<double>(within) / static_cast<double>(stations) : 1.0;
  SweepReport out;
  out.passed = fraction >= tolerances.pass_fraction;
  out.report = {{"suite", "simulate"},
                {"n", n},
                {"a", json_number(cfg.a)},
                {"samples", samples},
                {"slots", slots},
                {"seed", seed},
                {"stations", stations},
                {"within_z_max", within},
                {"pass_fraction", json_number(fraction)},
                {"required_fraction", json_number(tolerances.pass_fraction)},
                {"z_max", json_number(tolerances.z_max)},
                {"worst_abs_z", json_number(worst)},
                {"outliers", witnesses}};
  return out;
}

}  // namespace wlanrr::cli
