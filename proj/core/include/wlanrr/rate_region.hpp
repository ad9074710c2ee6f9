#pragma once

// Geometry of the throughput rate region: the boundary function h, boundary
// points along rays, tangent hyperplanes and membership classification.

#include <cstdint>
#include <span>
#include <vector>

#include "wlanrr/wlan_model.hpp"

namespace wlanrr {

/// A point on the rate-region boundary together with its supporting
/// hyperplane {s : normal . s = rhs}.
struct BoundaryPoint {
  AttemptVector x_star;
  ThroughputVector s_star;  // at bursts = burst_max
  double lambda_star = 0.0;
  std::vector<double> direction;  // y, positive, sums to one
  std::vector<double> normal;     // b
  double rhs = 0.0;               // 1 / prod(1 + x*_j)
};

/// h(x) = sum_i x_i / (1 + x_i) + (1 - a) / prod_j (1 + x_j).
/// Boundary attempt vectors are exactly those with h(x) = 1.
double boundary_h(const AttemptVector& x, double a);
double boundary_h(const AttemptVector& x, const WlanConfig& cfg);

/// Solve for the boundary point on the ray x = lambda * xbar with
/// xbar_i = y_i / (L_i * burst_max_i).
///
/// The map lambda -> h(lambda * xbar) is strictly increasing, so the root
/// is bracketed by doubling lambda_hi from 1 and then bisected until
/// |h - 1| <= 1e-12 (or 200 iterations). The direction is renormalised to
/// sum to one.
///
/// Throws BoundaryUnattainable for n = 1 and DomainError if any y_i <= 0.
BoundaryPoint boundary_scale(std::span<const double> direction, const WlanConfig& cfg);

/// Normal b and right-hand side of the tangent hyperplane at a boundary
/// point (bursts at burst_max).
struct TangentPlane {
  std::vector<double> normal;
  double rhs = 0.0;
};

/// Throws PreconditionError if |h(x*) - 1| > 1e-8.
TangentPlane tangent_normal(const AttemptVector& x_star, const WlanConfig& cfg);

/// Same formula with no boundary check.
TangentPlane tangent_normal_unchecked(const AttemptVector& x, const WlanConfig& cfg);

/// Residuals r_k = sum_i b_i ds_i/dx_k of the tangent normal against a
/// central finite-difference Jacobian of s(x, burst_max).
struct OrthogonalityResidual {
  std::vector<double> residual;
  std::vector<double> scale;  // sum_i |b_i| |ds_i/dx_k|

  /// max_k |r_k| / scale_k (0 where the scale vanishes).
  double max_relative() const;
};

OrthogonalityResidual orthogonality_check(const AttemptVector& x_star,
                                          const WlanConfig& cfg);

/// Central finite-difference Jacobian J[i][k] = ds_i/dx_k at bursts N.
std::vector<std::vector<double>> throughput_jacobian_fd(const AttemptVector& x,
                                                        const BurstVector& bursts,
                                                        const WlanConfig& cfg);

enum class RegionVerdict { kInside, kBoundary, kOutside };

const char* to_string(RegionVerdict verdict);

struct Membership {
  RegionVerdict verdict = RegionVerdict::kInside;
  /// sum(s) / sum(s_boundary) along the ray through s; 0 for s = 0.
  double lambda = 0.0;
};

/// Classify s >= 0 against the rate region. Zero components are allowed:
/// those stations are held at x_i = 0. With a single active station the
/// supremum throughput L_i (not attained) is used as the boundary.
Membership in_rate_region(std::span<const double> s, const WlanConfig& cfg);

/// K boundary points. For n = 2 the directions are the grid
/// y_1 = k / (K + 1), k = 1..K; otherwise uniform on the open simplex,
/// deterministic given the seed.
std::vector<BoundaryPoint> sample_boundary(const WlanConfig& cfg, std::size_t count,
                                           std::uint64_t seed);

}  // namespace wlanrr
