#include "wlanrr/rate_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wlanrr/error.hpp"
#include "wlanrr/sampling.hpp"
#include "wlanrr/tolerances.hpp"

namespace wlanrr {

namespace {

double h_of(std::span<const double> x, double a) {
  double sum = 0.0;
  for (double v : x) sum += v / (1.0 + v);
  return sum + (1.0 - a) / one_plus_product(x);
}

// Unique lambda > 0 with h(lambda * xbar) = 1. xbar must have at least two
// positive entries (zeros allowed elsewhere).
double solve_ray(std::span<const double> xbar, double a) {
  std::vector<double> x(xbar.size());
  auto residual = [&](double lambda) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = lambda * xbar[i];
    return h_of(x, a) - 1.0;
  };

  double lo = 0.0;
  double hi = 1.0;
  while (residual(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw PreconditionError("boundary root could not be bracketed");
  }

  double best = hi;
  double best_residual = std::abs(residual(hi));
  for (int iter = 0; iter < tol::kBoundaryMaxIterations; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r = residual(mid);
    if (std::abs(r) < best_residual) {
      best = mid;
      best_residual = std::abs(r);
    }
    if (std::abs(r) <= tol::kBoundarySolve) break;
    (r < 0.0 ? lo : hi) = mid;
  }
  return best;
}

std::vector<double> normalised_direction(std::span<const double> direction,
                                         std::size_t n, bool allow_zero) {
  if (direction.size() != n) {
    throw DimensionError("direction: expected " + std::to_string(n) + " entries, got " +
                         std::to_string(direction.size()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = direction[i];
    const bool ok = allow_zero ? (y >= 0.0) : (y > 0.0);
    if (!ok || !std::isfinite(y)) {
      throw DomainError("direction entry y[" + std::to_string(i) + "] must be " +
                        (allow_zero ? "finite and >= 0" : "finite and > 0"));
    }
    total += y;
  }
  if (!(total > 0.0)) throw DomainError("direction must be nonzero");
  std::vector<double> y(direction.begin(), direction.end());
  for (auto& v : y) v /= total;
  return y;
}

}  // namespace

double boundary_h(const AttemptVector& x, double a) { return h_of(x.values(), a); }

double boundary_h(const AttemptVector& x, const WlanConfig& cfg) {
  if (x.size() != cfg.size()) throw DimensionError("attempt vector size does not match WLAN");
  return h_of(x.values(), cfg.a);
}

TangentPlane tangent_normal_unchecked(const AttemptVector& x, const WlanConfig& cfg) {
  if (x.size() != cfg.size()) throw DimensionError("attempt vector size does not match WLAN");
  const double prod = one_plus_product(x.values());
  TangentPlane plane;
  plane.rhs = 1.0 / prod;
  plane.normal.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double burst = cfg.burst_max[i];
    plane.normal[i] =
        ((burst - 1.0) / prod + 1.0 / (1.0 + x[i])) / (cfg.payload[i] * burst);
  }
  return plane;
}

TangentPlane tangent_normal(const AttemptVector& x_star, const WlanConfig& cfg) {
  const double h = boundary_h(x_star, cfg);
  if (std::abs(h - 1.0) > tol::kOnBoundary) {
    throw PreconditionError("attempt vector is not on the boundary (|h - 1| = " +
                            std::to_string(std::abs(h - 1.0)) + ")");
  }
  return tangent_normal_unchecked(x_star, cfg);
}

BoundaryPoint boundary_scale(std::span<const double> direction, const WlanConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.size();
  if (n == 1) throw BoundaryUnattainable();
  auto y = normalised_direction(direction, n, /*allow_zero=*/false);

  std::vector<double> xbar(n);
  for (std::size_t i = 0; i < n; ++i) xbar[i] = y[i] / (cfg.payload[i] * cfg.burst_max[i]);
  const double lambda = solve_ray(xbar, cfg.a);

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = lambda * xbar[i];

  BoundaryPoint point;
  point.x_star = AttemptVector(std::move(x));
  point.s_star = throughput(point.x_star, BurstVector::max_of(cfg), cfg);
  point.lambda_star = lambda;
  point.direction = std::move(y);
  auto plane = tangent_normal_unchecked(point.x_star, cfg);
  point.normal = std::move(plane.normal);
  point.rhs = plane.rhs;
  return point;
}

std::vector<std::vector<double>> throughput_jacobian_fd(const AttemptVector& x,
                                                        const BurstVector& bursts,
                                                        const WlanConfig& cfg) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> jac(n, std::vector<double>(n));
  std::vector<double> probe = x.vector();
  for (std::size_t k = 0; k < n; ++k) {
    const double xk = x[k];
    const double step = tol::kFiniteDifferenceStep * (xk > 0.0 ? xk : 1.0);
    const bool central = xk >= step;
    probe[k] = xk + step;
    const auto up = throughput(AttemptVector(probe), bursts, cfg);
    probe[k] = central ? xk - step : xk;
    const auto down = throughput(AttemptVector(probe), bursts, cfg);
    probe[k] = xk;
    const double width = central ? 2.0 * step : step;
    for (std::size_t i = 0; i < n; ++i) jac[i][k] = (up[i] - down[i]) / width;
  }
  return jac;
}

double OrthogonalityResidual::max_relative() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < residual.size(); ++k) {
    if (scale[k] > 0.0) worst = std::max(worst, std::abs(residual[k]) / scale[k]);
  }
  return worst;
}

OrthogonalityResidual orthogonality_check(const AttemptVector& x_star,
                                          const WlanConfig& cfg) {
  const auto plane = tangent_normal_unchecked(x_star, cfg);
  const auto jac = throughput_jacobian_fd(x_star, BurstVector::max_of(cfg), cfg);
  const std::size_t n = x_star.size();
  OrthogonalityResidual out;
  out.residual.assign(n, 0.0);
  out.scale.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      out.residual[k] += plane.normal[i] * jac[i][k];
      out.scale[k] += std::abs(plane.normal[i]) * std::abs(jac[i][k]);
    }
  }
  return out;
}

const char* to_string(RegionVerdict verdict) {
  switch (verdict) {
    case RegionVerdict::kInside:
      return "inside";
    case RegionVerdict::kBoundary:
      return "boundary";
    case RegionVerdict::kOutside:
      return "outside";
  }
  return "unknown";
}

Membership in_rate_region(std::span<const double> s, const WlanConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.size();
  if (s.size() != n) throw DimensionError("throughput vector size does not match WLAN");
  for (double v : s) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("throughputs must be finite and >= 0");
  }
  const double total = std::accumulate(s.begin(), s.end(), 0.0);
  if (total == 0.0) return {RegionVerdict::kInside, 0.0};

  const auto y = normalised_direction(s, n, /*allow_zero=*/true);
  const auto active = std::count_if(y.begin(), y.end(), [](double v) { return v > 0.0; });

  double lambda = 0.0;
  if (active == 1) {
    // s_i = N x L / (a + N x) -> L as x -> infinity: a supremum, never attained.
    const auto i = static_cast<std::size_t>(
        std::find_if(y.begin(), y.end(), [](double v) { return v > 0.0; }) - y.begin());
    lambda = s[i] / cfg.payload[i];
  } else {
    std::vector<double> xbar(n);
    for (std::size_t i = 0; i < n; ++i) xbar[i] = y[i] / (cfg.payload[i] * cfg.burst_max[i]);
    const double scale = solve_ray(xbar, cfg.a);
    for (auto& v : xbar) v *= scale;
    const auto boundary = throughput(AttemptVector(std::move(xbar)), BurstVector::max_of(cfg), cfg);
    lambda = total / std::accumulate(boundary.begin(), boundary.end(), 0.0);
  }

  RegionVerdict verdict = RegionVerdict::kOutside;
  if (std::abs(lambda - 1.0) <= tol::kMembershipBand) {
    verdict = RegionVerdict::kBoundary;
  } else if (lambda < 1.0) {
    verdict = RegionVerdict::kInside;
  }
  return {verdict, lambda};
}

std::vector<BoundaryPoint> sample_boundary(const WlanConfig& cfg, std::size_t count,
                                           std::uint64_t seed) {
  cfg.validate();
  const std::size_t n = cfg.size();
  if (n == 1) throw BoundaryUnattainable();
  std::vector<BoundaryPoint> points;
  points.reserve(count);
  if (n == 2) {
    for (std::size_t k = 1; k <= count; ++k) {
      const double y1 = static_cast<double>(k) / static_cast<double>(count + 1);
      const double y[2] = {y1, 1.0 - y1};
      points.push_back(boundary_scale(y, cfg));
    }
    return points;
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    points.push_back(boundary_scale(sample_simplex(rng, n), cfg));
  }
  return points;
}

}  // namespace wlanrr
