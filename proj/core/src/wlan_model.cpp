#include "wlanrr/wlan_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wlanrr/error.hpp"
#include "wlanrr/tolerances.hpp"

namespace wlanrr {

namespace {

void require_same_size(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(expected) +
                         " entries, got " + std::to_string(got));
  }
}

bool needs_log_product(std::span<const double> x) {
  if (x.size() > static_cast<std::size_t>(tol::kLogProductStations)) return true;
  return std::any_of(x.begin(), x.end(),
                     [](double v) { return v > tol::kLogProductAttempt; });
}

}  // namespace

void WlanConfig::validate() const {
  const std::size_t n = payload.size();
  if (n == 0) throw DomainError("WLAN needs at least one station");
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("idle-slot ratio a must be finite and > 0");
  }
  require_same_size(n, burst_min.size(), "burst_min");
  require_same_size(n, burst_max.size(), "burst_max");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(payload[i] > 0.0) || !std::isfinite(payload[i])) {
      throw DomainError("payload L[" + std::to_string(i) + "] must be finite and > 0");
    }
    if (burst_min[i] < 1 || burst_min[i] > burst_max[i]) {
      throw DomainError("burst bounds for station " + std::to_string(i) +
                        " must satisfy 1 <= N_lo <= N_hi");
    }
  }
}

WlanConfig WlanConfig::homogeneous(std::size_t n, double a, double payload, int burst) {
  WlanConfig cfg;
  cfg.a = a;
  cfg.payload.assign(n, payload);
  cfg.burst_min.assign(n, 1);
  cfg.burst_max.assign(n, burst);
  cfg.validate();
  return cfg;
}

AttemptVector::AttemptVector(std::vector<double> x) : x_(std::move(x)) {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!(x_[i] >= 0.0) || !std::isfinite(x_[i])) {
      throw DomainError("attempt rate x[" + std::to_string(i) +
                        "] must be finite and >= 0");
    }
  }
}

BurstVector::BurstVector(std::vector<double> bursts) : n_(std::move(bursts)) {
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (!(n_[i] >= 1.0) || !std::isfinite(n_[i])) {
      throw DomainError("burst N[" + std::to_string(i) + "] must be finite and >= 1");
    }
  }
}

BurstVector BurstVector::ones(std::size_t n) {
  return BurstVector(std::vector<double>(n, 1.0));
}

BurstVector BurstVector::max_of(const WlanConfig& cfg) {
  return BurstVector(std::vector<double>(cfg.burst_max.begin(), cfg.burst_max.end()));
}

BurstVector BurstVector::min_of(const WlanConfig& cfg) {
  return BurstVector(std::vector<double>(cfg.burst_min.begin(), cfg.burst_min.end()));
}

void BurstVector::check_within(const WlanConfig& cfg) const {
  require_same_size(cfg.size(), n_.size(), "burst vector");
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (n_[i] < cfg.burst_min[i] || n_[i] > cfg.burst_max[i]) {
      throw DomainError("burst N[" + std::to_string(i) + "] outside [N_lo, N_hi]");
    }
  }
}

AttemptVector tau_to_x(std::span<const double> tau) {
  std::vector<double> x(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (!(tau[i] >= 0.0 && tau[i] < 1.0)) {
      throw DomainError("attempt probability tau[" + std::to_string(i) +
                        "] must lie in [0, 1)");
    }
    x[i] = tau[i] / (1.0 - tau[i]);
  }
  return AttemptVector(std::move(x));
}

std::vector<double> x_to_tau(const AttemptVector& x) {
  std::vector<double> tau(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) tau[i] = x[i] / (1.0 + x[i]);
  return tau;
}

double one_plus_product(std::span<const double> x) {
  if (needs_log_product(x)) {
    double log_sum = 0.0;
    for (double v : x) log_sum += std::log1p(v);
    return std::exp(log_sum);
  }
  double p = 1.0;
  for (double v : x) p *= 1.0 + v;
  return p;
}

double one_plus_product_excluding(std::span<const double> x, std::size_t skip) {
  if (needs_log_product(x)) {
    double log_sum = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (k != skip) log_sum += std::log1p(x[k]);
    }
    return std::exp(log_sum);
  }
  double p = 1.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k != skip) p *= 1.0 + x[k];
  }
  return p;
}

double idle_probability(const AttemptVector& x) {
  return 1.0 / one_plus_product(x.values());
}

double success_probability(std::size_t station, const AttemptVector& x) {
  if (station >= x.size()) {
    throw DomainError("station index " + std::to_string(station) + " out of range for " +
                      std::to_string(x.size()) + " stations");
  }
  return x[station] * idle_probability(x);
}

double collision_probability(const AttemptVector& x) {
  const double idle = idle_probability(x);
  double success = 0.0;
  for (double v : x) success += v * idle;
  return std::max(0.0, 1.0 - idle - success);
}

double x_denominator(const AttemptVector& x, const BurstVector& bursts,
                     const WlanConfig& cfg) {
  require_same_size(cfg.size(), x.size(), "attempt vector");
  require_same_size(cfg.size(), bursts.size(), "burst vector");
  double linear = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) linear += (bursts[k] - 1.0) * x[k];
  return cfg.a + linear + (one_plus_product(x.values()) - 1.0);
}

ThroughputVector throughput(const AttemptVector& x, const BurstVector& bursts,
                            const WlanConfig& cfg) {
  const double denom = x_denominator(x, bursts, cfg);
  ThroughputVector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = bursts[i] * x[i] * cfg.payload[i] / denom;
  }
  return s;
}

}  // namespace wlanrr
