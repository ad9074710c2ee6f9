#pragma once

namespace wlanrr::tol {

// Library-wide numeric tolerances. Tests and the CLI read these rather
// than restating literals.

/// Residual |h(x*) - 1| that boundary points are guaranteed to meet.
inline constexpr double kBoundaryResidual = 1e-10;

/// Target residual for the boundary root finder.
inline constexpr double kBoundarySolve = 1e-12;

/// Maximum bisection iterations of the boundary root finder.
inline constexpr int kBoundaryMaxIterations = 200;

/// Operations that require an on-boundary input reject |h(x) - 1| above this.
inline constexpr double kOnBoundary = 1e-8;

/// Half-width of the "boundary" verdict band for rate-region membership.
inline constexpr double kMembershipBand = 1e-8;

/// Slack allowed when testing membership of a maximal convex subset.
inline constexpr double kSubsetSlack = 1e-12;

/// Relative step for central finite differences.
inline constexpr double kFiniteDifferenceStep = 1e-6;

/// Above these thresholds prod(1 + x_k) is accumulated in log space.
inline constexpr int kLogProductStations = 30;
inline constexpr double kLogProductAttempt = 1e6;

}  // namespace wlanrr::tol
