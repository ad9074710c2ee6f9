#include "wlanrr/convex_subsets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wlanrr/error.hpp"
#include "wlanrr/tolerances.hpp"

namespace wlanrr {

namespace {

void require_on_boundary(const AttemptVector& x, const WlanConfig& cfg, const char* what) {
  const double residual = std::abs(boundary_h(x, cfg) - 1.0);
  if (residual > tol::kOnBoundary) {
    throw PreconditionError(std::string(what) + " is not on the boundary (|h - 1| = " +
                            std::to_string(residual) + ")");
  }
}

}  // namespace

std::vector<double> alpha_coefficients(const AttemptVector& x_star, const WlanConfig& cfg) {
  cfg.validate();
  if (x_star.size() != cfg.size()) throw DimensionError("attempt vector size does not match WLAN");
  if (cfg.size() >= 2) require_on_boundary(x_star, cfg, "x*");

  std::vector<double> alpha(cfg.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double burst = cfg.burst_max[i];
    alpha[i] = (burst - 1.0 + one_plus_product_excluding(x_star.values(), i)) /
               (cfg.payload[i] * burst);
  }
  return alpha;
}

ConvexSubset make_subset(const AttemptVector& x_star, const WlanConfig& cfg,
                         std::string clique_ref) {
  return ConvexSubset{alpha_coefficients(x_star, cfg), x_star, std::move(clique_ref)};
}

double subset_load(std::span<const double> s, const ConvexSubset& subset) {
  if (s.size() != subset.alpha.size()) {
    throw DimensionError("throughput vector size does not match subset");
  }
  double load = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) load += subset.alpha[i] * s[i];
  return load;
}

bool subset_contains(std::span<const double> s, const ConvexSubset& subset) {
  for (double v : s) {
    if (v < 0.0) return false;
  }
  return subset_load(s, subset) <= 1.0 + tol::kSubsetSlack;
}

ConvexSubset symmetric_subset(const WlanConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.size();
  const bool homogeneous =
      std::all_of(cfg.payload.begin(), cfg.payload.end(),
                  [&](double v) { return v == cfg.payload.front(); }) &&
      std::all_of(cfg.burst_max.begin(), cfg.burst_max.end(),
                  [&](int v) { return v == cfg.burst_max.front(); });
  if (!homogeneous) {
    throw PreconditionError("symmetric subset needs equal payloads and burst maxima");
  }
  if (n == 1) throw BoundaryUnattainable();

  const double nd = static_cast<double>(n);
  auto residual = [&](double x) {
    return nd * x / (1.0 + x) + (1.0 - cfg.a) / std::pow(1.0 + x, nd) - 1.0;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (residual(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int iter = 0; iter < tol::kBoundaryMaxIterations; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r = residual(mid);
    if (r == 0.0) {
      lo = hi = mid;
      break;
    }
    (r < 0.0 ? lo : hi) = mid;
  }
  const double x = std::abs(residual(lo)) <= std::abs(residual(hi)) ? lo : hi;
  return make_subset(AttemptVector(std::vector<double>(n, x)), cfg, "symmetric");
}

double complement_convexity_margin(const AttemptVector& x_star, const AttemptVector& y_star,
                                   const WlanConfig& cfg) {
  cfg.validate();
  require_on_boundary(x_star, cfg, "x*");
  require_on_boundary(y_star, cfg, "y*");
  const auto plane = tangent_normal_unchecked(x_star, cfg);
  const auto s = throughput(y_star, BurstVector::max_of(cfg), cfg);
  double lhs = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) lhs += plane.normal[i] * s[i];
  return lhs - plane.rhs;
}

double post_inequality_check(std::span<const double> r, std::span<const double> z) {
  const std::size_t n = r.size();
  if (z.size() != n) throw DimensionError("r and z must have the same length");
  if (n == 0) throw DomainError("r must be nonempty");
  double sum_r = 0.0;
  double dot = 0.0;
  double norm_r = 0.0;
  double norm_z = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(r[j] >= 0.0 && r[j] <= 1.0)) {
      throw DomainError("r[" + std::to_string(j) + "] must lie in [0, 1]");
    }
    if (!std::isfinite(z[j])) throw DomainError("z must be finite");
    sum_r += r[j];
    dot += r[j] * z[j];
    norm_r += r[j] * r[j];
    norm_z += z[j] * z[j];
  }
  if (std::abs(sum_r - static_cast<double>(n - 1)) > 1e-12) {
    throw DomainError("sum of r must equal n - 1");
  }
  if (std::abs(dot) > 1e-12 * std::max(1.0, std::sqrt(norm_r * norm_z))) {
    throw DomainError("r and z must be orthogonal");
  }
  // sum_{i<j} z_i z_j = ((sum z)^2 - |z|^2) / 2
  double sum_z = 0.0;
  for (double v : z) sum_z += v;
  return 0.5 * (sum_z * sum_z - norm_z);
}

}  // namespace wlanrr
