#pragma once

// Network utility maximisation over a polytope of clique constraints.

#include <functional>
#include <span>
#include <vector>

#include "wlanrr/mesh.hpp"
#include "wlanrr/utility.hpp"

namespace wlanrr {

struct NumOptions {
  double initial_t = 1.0;
  double t_multiplier = 10.0;
  double newton_tolerance = 1e-10;  // on lambda^2 / 2
  double gap_tolerance = 1e-8;      // m / t
  double kkt_tolerance = 1e-8;
  int max_outer_iterations = 50;
  int max_newton_iterations = 100;
};

struct NumSolution {
  std::vector<double> rates;        // s_f
  std::vector<double> slacks;       // bound_c - coeff_c . s
  std::vector<double> multipliers;  // central-path duals of the rows
  double objective = 0.0;           // sum_f w_f U_f(s_f)
  /// max_f |w_f U'_f - sum_c lambda_c coeff_cf + mu_f| / max(1, max_f |w_f U'_f|)
  double kkt_residual = 0.0;
  double duality_gap = 0.0;  // (rows + flows) / t
  int outer_iterations = 0;
  int newton_iterations = 0;
  bool converged = false;
};

/// Maximise sum_f w_f U_f(s_f) subject to the polytope rows and s >= 0 by
/// the logarithmic barrier method with damped Newton steps.
///
/// `utilities` holds one entry per flow, or a single entry shared by all.
/// `weights` may be empty (all ones).
///
/// Throws InfeasibleError if a row bound is not positive (no strictly
/// feasible point) or some flow appears in no row (unbounded), and
/// DomainError for negative coefficients or a utility that is not
/// increasing and concave on the feasible rate range.
NumSolution solve_num(const Polytope& polytope, std::span<const Utility> utilities,
                      std::span<const double> weights = {}, const NumOptions& options = {});

/// Golden-section maximisation of a unimodal f on [lo, hi] until the
/// bracket is narrower than `tolerance`. Returns the midpoint of the final
/// bracket.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tolerance, int* evaluations = nullptr);

}  // namespace wlanrr
