#pragma once

// Maximal convex subsets of the rate region and numeric certificates for
// the strict convexity of its complement.

#include <span>
#include <string>
#include <vector>

#include "wlanrr/rate_region.hpp"
#include "wlanrr/wlan_model.hpp"

namespace wlanrr {

/// C(x*) = { s >= 0 : sum_i alpha_i s_i <= 1 }, the largest convex subset
/// of the rate region containing the boundary throughput s(x*).
struct ConvexSubset {
  std::vector<double> alpha;
  AttemptVector origin_x_star;
  std::string clique_ref;
};

/// alpha_i = (burst_max_i - 1 + prod_{j != i} (1 + x*_j)) / (L_i burst_max_i).
///
/// Equal to b_i(x*) * prod_j (1 + x*_j): the tangent hyperplane divided by
/// its right-hand side. For n = 1 this reduces to 1 / L, the cap at the
/// (unattained) single-station supremum, and no boundary check is made.
/// Throws PreconditionError if n >= 2 and |h(x*) - 1| > 1e-8.
std::vector<double> alpha_coefficients(const AttemptVector& x_star, const WlanConfig& cfg);

ConvexSubset make_subset(const AttemptVector& x_star, const WlanConfig& cfg,
                         std::string clique_ref = {});

/// True iff sum_i alpha_i s_i <= 1 + 1e-12.
bool subset_contains(std::span<const double> s, const ConvexSubset& subset);

/// sum_i alpha_i s_i.
double subset_load(std::span<const double> s, const ConvexSubset& subset);

/// Subset generated by the symmetric boundary point of a homogeneous WLAN
/// (equal L and burst_max). Solves n x / (1 + x) + (1 - a) / (1 + x)^n = 1
/// for the common attempt rate. Throws PreconditionError on heterogeneous
/// configurations and BoundaryUnattainable for n = 1.
ConvexSubset symmetric_subset(const WlanConfig& cfg);

/// sum_i b_i(x*) s_i(y*, burst_max) - 1 / prod_j (1 + x*_j).
/// Zero when y* = x*, strictly positive otherwise. Both inputs must be on
/// the boundary.
double complement_convexity_margin(const AttemptVector& x_star, const AttemptVector& y_star,
                                   const WlanConfig& cfg);

/// sum_{i<j} z_i z_j, which is negative whenever 0 <= r_j <= 1,
/// sum r = n - 1, r . z = 0 and z is nondegenerate. Throws DomainError
/// when a precondition is violated.
double post_inequality_check(std::span<const double> r, std::span<const double> z);

}  // namespace wlanrr
