#pragma once

// Analytic throughput model of a single 802.11 WLAN (clique) with TXOP
// bursts. Time is measured in units of the frame/collision duration T_c,
// so throughputs are in payload bits per T_c.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace wlanrr {

/// Per-station throughputs, bits per T_c.
using ThroughputVector = std::vector<double>;

/// One WLAN: idle-slot ratio a = sigma / T_c, per-station frame payload
/// L_i and admissible TXOP burst range [burst_min_i, burst_max_i].
struct WlanConfig {
  double a = 1.0;
  std::vector<double> payload;
  std::vector<int> burst_min;
  std::vector<int> burst_max;

  std::size_t size() const { return payload.size(); }

  /// Throws DomainError unless n >= 1, a > 0, L_i > 0 and
  /// 1 <= burst_min_i <= burst_max_i with consistent lengths.
  void validate() const;

  /// n identical stations with burst range [1, burst].
  static WlanConfig homogeneous(std::size_t n, double a, double payload = 1.0,
                                int burst = 1);
};

/// Transformed attempt rates x_i = tau_i / (1 - tau_i), each in [0, inf).
class AttemptVector {
 public:
  AttemptVector() = default;
  /// Throws DomainError on a negative or non-finite entry.
  explicit AttemptVector(std::vector<double> x);
  AttemptVector(std::initializer_list<double> x)
      : AttemptVector(std::vector<double>(x)) {}

  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  std::span<const double> values() const { return x_; }
  const std::vector<double>& vector() const { return x_; }

  auto begin() const { return x_.begin(); }
  auto end() const { return x_.end(); }

 private:
  std::vector<double> x_;
};

/// TXOP burst sizes N_i (frames per won transmission opportunity). Real
/// values >= 1 are accepted; no formula needs integrality.
class BurstVector {
 public:
  BurstVector() = default;
  explicit BurstVector(std::vector<double> bursts);
  BurstVector(std::initializer_list<double> bursts)
      : BurstVector(std::vector<double>(bursts)) {}

  /// All-ones bursts for n stations.
  static BurstVector ones(std::size_t n);
  /// N = burst_max of the configuration, the choice that attains the boundary.
  static BurstVector max_of(const WlanConfig& cfg);
  /// N = burst_min of the configuration.
  static BurstVector min_of(const WlanConfig& cfg);

  std::size_t size() const { return n_.size(); }
  double operator[](std::size_t i) const { return n_[i]; }
  std::span<const double> values() const { return n_; }

  /// Throws DomainError unless burst_min_i <= N_i <= burst_max_i.
  void check_within(const WlanConfig& cfg) const;

 private:
  std::vector<double> n_;
};

AttemptVector tau_to_x(std::span<const double> tau);
std::vector<double> x_to_tau(const AttemptVector& x);

/// prod_k (1 + x_k). Accumulated in log space for large n or large x.
double one_plus_product(std::span<const double> x);

/// prod_{k != skip} (1 + x_k).
double one_plus_product_excluding(std::span<const double> x, std::size_t skip);

double idle_probability(const AttemptVector& x);

/// P_succ,i = x_i * P_idle. Zero-based station index; throws DomainError
/// if out of range.
double success_probability(std::size_t station, const AttemptVector& x);

/// 1 - P_idle - sum_i P_succ,i, clamped at zero against rounding.
double collision_probability(const AttemptVector& x);

/// X(x, N) = a + sum_k (N_k - 1) x_k + prod_k (1 + x_k) - 1.
double x_denominator(const AttemptVector& x, const BurstVector& bursts,
                     const WlanConfig& cfg);

/// s_i = N_i x_i L_i / X(x, N).
ThroughputVector throughput(const AttemptVector& x, const BurstVector& bursts,
                            const WlanConfig& cfg);

}  // namespace wlanrr
