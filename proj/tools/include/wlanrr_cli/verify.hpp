#pragma once

// Property sweeps behind `wlanrr verify`.

#include <cstdint>
#include <json.hpp>
#include <optional>

#include "wlanrr/wlan_model.hpp"
#include "wlanrr_cli/scenario.hpp"

namespace wlanrr::cli {

struct SweepReport {
  bool passed = false;
  nlohmann::json report;
};

/// complement_convexity_margin > 0 over `samples` random boundary pairs.
SweepReport verify_convexity(const WlanConfig& cfg, std::size_t samples, std::uint64_t seed);

/// post_inequality_check < 0 over `samples` generated (r, z) pairs with n
/// cycling through 2..max_n, or fixed at `n` when given.
SweepReport verify_post(std::optional<std::size_t> n, std::size_t samples, std::uint64_t seed,
                        std::size_t max_n = 8);

/// Monte Carlo vs analytic throughput on `samples` random attempt vectors
/// for the given WLAN. Passes when the fraction of stations with
/// |z| <= z_max reaches pass_fraction.
SweepReport verify_simulation(const WlanConfig& cfg, std::size_t samples, std::uint64_t seed,
                              std::uint64_t slots, const Tolerances& tolerances);

}  // namespace wlanrr::cli
