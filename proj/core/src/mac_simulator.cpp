#include "wlanrr/mac_simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wlanrr/error.hpp"
#include "wlanrr/sampling.hpp"

namespace wlanrr {

void SimConfig::validate() const {
  wlan.validate();
  const std::size_t n = wlan.size();
  if (tau.size() != n || bursts.size() != n) {
    throw DimensionError("tau and bursts must have one entry per station");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(tau[i] >= 0.0 && tau[i] < 1.0)) {
      throw DomainError("tau[" + std::to_string(i) + "] must lie in [0, 1)");
    }
  }
  if (batches < 30) throw DomainError("batch means need at least 30 batches");
  if (slots < batches) throw DomainError("need at least one slot per batch");
}

SimResult simulate(const SimConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.wlan.size();
  const double a = cfg.wlan.a;

  SimResult out;
  out.slots = cfg.slots;
  out.success_slots.assign(n, 0);
  out.delivered_bits.assign(n, 0.0);

  std::vector<double> batch_sum(n, 0.0);
  std::vector<double> batch_sum_sq(n, 0.0);
  std::vector<std::uint64_t> success(n);

  for (std::uint32_t b = 0; b < cfg.batches; ++b) {
    // Spread the remainder over the first batches.
    const std::uint64_t len = cfg.slots / cfg.batches + (b < cfg.slots % cfg.batches ? 1 : 0);
    Rng rng = Rng::substream(cfg.seed, b);
    std::uint64_t idle = 0;
    std::uint64_t collisions = 0;
    std::fill(success.begin(), success.end(), 0);

    for (std::uint64_t slot = 0; slot < len; ++slot) {
      std::size_t attempts = 0;
      std::size_t sender = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (rng.uniform() < cfg.tau[i]) {
          ++attempts;
          sender = i;
        }
      }
      if (attempts == 0) {
        ++idle;
      } else if (attempts == 1) {
        ++success[sender];
      } else {
        ++collisions;
      }
    }

    double elapsed = a * static_cast<double>(idle) + static_cast<double>(collisions);
    for (std::size_t i = 0; i < n; ++i) {
      elapsed += cfg.bursts[i] * static_cast<double>(success[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double bits =
          static_cast<double>(success[i]) * cfg.bursts[i] * cfg.wlan.payload[i];
      const double rate = bits / elapsed;
      batch_sum[i] += rate;
      batch_sum_sq[i] += rate * rate;
      out.delivered_bits[i] += bits;
      out.success_slots[i] += success[i];
    }
    out.idle_slots += idle;
    out.collision_slots += collisions;
    out.elapsed += elapsed;
  }

  const double batches = cfg.batches;
  out.throughput.resize(n);
  out.standard_error.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.throughput[i] = out.delivered_bits[i] / out.elapsed;
    const double mean = batch_sum[i] / batches;
    const double var = std::max(0.0, (batch_sum_sq[i] - batches * mean * mean) / (batches - 1.0));
    out.standard_error[i] = std::sqrt(var / batches);
  }
  return out;
}

std::vector<StationZ> compare_to(const SimResult& result, const ThroughputVector& analytic) {
  if (analytic.size() != result.throughput.size()) {
    throw DimensionError("analytic throughput size does not match simulation");
  }
  std::vector<StationZ> out(analytic.size());
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    auto& z = out[i];
    z.simulated = result.throughput[i];
    z.analytic = analytic[i];
    z.standard_error = result.standard_error[i];
    const double diff = z.simulated - z.analytic;
    if (z.standard_error > 0.0) {
      z.z = diff / z.standard_error;
    } else if (diff == 0.0) {
      z.exact = true;
    } else {
      z.z = std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
  }
  return out;
}

std::vector<StationZ> compare_to_model(const SimConfig& cfg) {
  const auto result = simulate(cfg);
  const auto analytic = throughput(tau_to_x(cfg.tau), cfg.bursts, cfg.wlan);
  return compare_to(result, analytic);
}

}  // namespace wlanrr
