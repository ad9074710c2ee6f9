#pragma once

// Slot-level Monte Carlo simulation of a saturated WLAN. Serves as an
// independent check of the analytic throughput model: it never calls it.
//
// Each MAC slot every station attempts independently with probability
// tau_i. No attempt: an idle slot of length a. One attempt by station i: a
// TXOP burst of N_i frames, length N_i, delivering N_i * L_i bits. Two or
// more attempts: a collision of length 1.

#include <cstdint>
#include <vector>

#include "wlanrr/wlan_model.hpp"

namespace wlanrr {

struct SimConfig {
  WlanConfig wlan;
  std::vector<double> tau;
  BurstVector bursts;
  std::uint64_t slots = 1'000'000;
  std::uint64_t seed = 1;
  std::uint32_t batches = 40;  // batch means; at least 30

  /// Throws DomainError on tau outside [0, 1), slots < batches,
  /// batches < 30 or mismatched sizes.
  void validate() const;
};

struct SimResult {
  std::uint64_t slots = 0;
  std::uint64_t idle_slots = 0;
  std::uint64_t collision_slots = 0;
  std::vector<std::uint64_t> success_slots;  // per station
  std::vector<double> delivered_bits;         // per station
  double elapsed = 0.0;                        // units of T_c
  std::vector<double> throughput;              // bits / elapsed
  std::vector<double> standard_error;          // batch means
};

/// Deterministic given the seed. Batch b draws from substream b of the seed.
SimResult simulate(const SimConfig& cfg);

struct StationZ {
  double simulated = 0.0;
  double analytic = 0.0;
  double standard_error = 0.0;
  double z = 0.0;
  /// Zero standard error with simulated == analytic (a silent station).
  bool exact = false;
};

/// (simulated - analytic) / standard_error per station against the
/// analytic model at x = tau / (1 - tau).
std::vector<StationZ> compare_to_model(const SimConfig& cfg);

/// Same comparison against a caller-supplied analytic throughput vector.
std::vector<StationZ> compare_to(const SimResult& result, const ThroughputVector& analytic);

}  // namespace wlanrr
