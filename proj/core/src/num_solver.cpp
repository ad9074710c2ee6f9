#include "wlanrr/num_solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wlanrr/error.hpp"

namespace wlanrr {

namespace {

struct Problem {
  Eigen::MatrixXd A;  // rows x flows
  Eigen::VectorXd b;
  std::vector<Utility> utilities;
  Eigen::VectorXd w;
};

Problem build_problem(const Polytope& polytope, std::span<const Utility> utilities,
                      std::span<const double> weights) {
  const auto n = static_cast<Eigen::Index>(polytope.num_flows);
  const auto m = static_cast<Eigen::Index>(polytope.rows.size());
  if (n == 0) throw DomainError("polytope has no flows");
  if (utilities.size() != 1 && utilities.size() != polytope.num_flows) {
    throw DimensionError("need one utility per flow, or a single shared utility");
  }
  if (!weights.empty() && weights.size() != polytope.num_flows) {
    throw DimensionError("need one weight per flow");
  }

  Problem p;
  p.A.resize(m, n);
  p.b.resize(m);
  for (Eigen::Index c = 0; c < m; ++c) {
    const auto& row = polytope.rows[c];
    if (row.coeff.size() != polytope.num_flows) {
      throw DimensionError("constraint '" + row.name + "' has the wrong number of coefficients");
    }
    for (Eigen::Index f = 0; f < n; ++f) {
      const double v = row.coeff[f];
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError("constraint '" + row.name + "' needs finite nonnegative coefficients");
      }
      p.A(c, f) = v;
    }
    if (!(row.bound > 0.0)) {
      throw InfeasibleError("constraint '" + row.name + "' leaves no strictly feasible point");
    }
    p.b(c) = row.bound;
  }
  for (Eigen::Index f = 0; f < n; ++f) {
    if (m == 0 || p.A.col(f).maxCoeff() <= 0.0) {
      throw InfeasibleError("flow " + std::to_string(f) + " is unconstrained: problem is unbounded");
    }
  }

  p.w = Eigen::VectorXd::Ones(n);
  for (Eigen::Index f = 0; f < n; ++f) {
    if (!weights.empty()) {
      if (!(weights[f] > 0.0) || !std::isfinite(weights[f])) {
        throw DomainError("weights must be finite and > 0");
      }
      p.w(f) = weights[f];
    }
    p.utilities.push_back(utilities.size() == 1 ? utilities[0] : utilities[f]);
  }
  return p;
}

// Sampled check that every utility is increasing and concave on
// (0, cap_f], cap_f the largest rate any row allows.
void check_concave_on_range(const Problem& p) {
  constexpr int kSamples = 64;
  for (Eigen::Index f = 0; f < p.A.cols(); ++f) {
    double cap = std::numeric_limits<double>::infinity();
    for (Eigen::Index c = 0; c < p.A.rows(); ++c) {
      if (p.A(c, f) > 0.0) cap = std::min(cap, p.b(c) / p.A(c, f));
    }
    const auto& u = p.utilities[f];
    for (int k = 1; k <= kSamples; ++k) {
      const double x = cap * k / kSamples;
      if (!u.in_domain(x)) {
        throw DomainError(u.describe() + " is undefined on part of the feasible range");
      }
      if (!(u.gradient(x) > 0.0) || u.curvature(x) > 0.0) {
        throw DomainError(u.describe() + " is not increasing and concave on the feasible range");
      }
    }
  }
}

// Barrier objective, or +inf outside the strict interior.
double barrier_value(const Problem& p, const Eigen::VectorXd& s, double t) {
  double value = 0.0;
  for (Eigen::Index f = 0; f < s.size(); ++f) {
    if (!(s(f) > 0.0) || !p.utilities[f].in_domain(s(f))) {
      return std::numeric_limits<double>::infinity();
    }
    value -= t * p.w(f) * p.utilities[f].value(s(f)) + std::log(s(f));
  }
  const Eigen::VectorXd slack = p.b - p.A * s;
  for (Eigen::Index c = 0; c < slack.size(); ++c) {
    if (!(slack(c) > 0.0)) return std::numeric_limits<double>::infinity();
    value -= std::log(slack(c));
  }
  return std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
}

Eigen::VectorXd utility_gradient(const Problem& p, const Eigen::VectorXd& s) {
  Eigen::VectorXd g(s.size());
  for (Eigen::Index f = 0; f < s.size(); ++f) g(f) = p.w(f) * p.utilities[f].gradient(s(f));
  return g;
}

struct Duals {
  Eigen::VectorXd lambda;  // rows
  Eigen::VectorXd mu;      // s >= 0
  double residual = 0.0;
};

// Relative stationarity residual |w U'(s) - A^T lambda + mu|_inf.
double stationarity(const Problem& p, const Eigen::VectorXd& s, const Duals& d) {
  const Eigen::VectorXd ug = utility_gradient(p, s);
  const Eigen::VectorXd r = ug - p.A.transpose() * d.lambda + d.mu;
  return r.cwiseAbs().maxCoeff() / std::max(1.0, ug.cwiseAbs().maxCoeff());
}

// Central-path duals lambda_c = 1 / (t slack_c) carry the cancellation
// error of slack = b - A s once slacks approach the gap. Refit them by
// least squares on the rows and bounds that are active, and keep the
// refit when it is nonnegative and no worse.
Duals fit_multipliers(const Problem& p, const Eigen::VectorXd& s, double t) {
  const Eigen::Index n = p.A.cols();
  const Eigen::Index m = p.A.rows();
  const Eigen::VectorXd slack = p.b - p.A * s;

  Duals central;
  central.lambda = (1.0 / (t * slack.array())).matrix();
  central.mu = (1.0 / (t * s.array())).matrix();
  central.residual = stationarity(p, s, central);

  constexpr double kActive = 1e-6;
  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> bounds;
  for (Eigen::Index c = 0; c < m; ++c) {
    if (slack(c) <= kActive * p.b(c)) rows.push_back(c);
  }
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  for (Eigen::Index f = 0; f < n; ++f) {
    if (s(f) <= kActive * scale) bounds.push_back(f);
  }
  const auto k = static_cast<Eigen::Index>(rows.size() + bounds.size());
  if (k == 0) return central;

  Eigen::MatrixXd basis(n, k);
  for (std::size_t j = 0; j < rows.size(); ++j) basis.col(j) = p.A.row(rows[j]).transpose();
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    basis.col(rows.size() + j) = -Eigen::VectorXd::Unit(n, bounds[j]);
  }
  const Eigen::VectorXd coef = basis.colPivHouseholderQr().solve(utility_gradient(p, s));
  if ((coef.array() < 0.0).any()) return central;

  Duals refit;
  refit.lambda = Eigen::VectorXd::Zero(m);
  refit.mu = Eigen::VectorXd::Zero(n);
  for (std::size_t j = 0; j < rows.size(); ++j) refit.lambda(rows[j]) = coef(j);
  for (std::size_t j = 0; j < bounds.size(); ++j) refit.mu(bounds[j]) = coef(rows.size() + j);
  refit.residual = stationarity(p, s, refit);
  return refit.residual <= central.residual ? refit : central;
}

}  // namespace

NumSolution solve_num(const Polytope& polytope, std::span<const Utility> utilities,
                      std::span<const double> weights, const NumOptions& options) {
  const Problem p = build_problem(polytope, utilities, weights);
  check_concave_on_range(p);
  const Eigen::Index n = p.A.cols();
  const Eigen::Index m = p.A.rows();

  // Strictly feasible start: every row at most half loaded.
  double theta = std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < m; ++c) theta = std::min(theta, 0.5 * p.b(c) / p.A.row(c).sum());
  Eigen::VectorXd s = Eigen::VectorXd::Constant(n, theta);

  NumSolution sol;
  double t = options.initial_t;
  const double total_constraints = static_cast<double>(m + n);

  for (int outer = 0; outer < options.max_outer_iterations; ++outer) {
    ++sol.outer_iterations;
    // Centering by damped Newton.
    for (int it = 0; it < options.max_newton_iterations; ++it) {
      const Eigen::VectorXd slack = p.b - p.A * s;
      const Eigen::ArrayXd inv_slack = 1.0 / slack.array();
      const Eigen::ArrayXd inv_s = 1.0 / s.array();

      Eigen::VectorXd grad = p.A.transpose() * inv_slack.matrix() - inv_s.matrix();
      Eigen::MatrixXd hess = p.A.transpose() * inv_slack.square().matrix().asDiagonal() * p.A;
      for (Eigen::Index f = 0; f < n; ++f) {
        const auto& u = p.utilities[f];
        grad(f) -= t * p.w(f) * u.gradient(s(f));
        hess(f, f) += inv_s(f) * inv_s(f) - t * p.w(f) * u.curvature(s(f));
      }

      const Eigen::VectorXd step = -hess.ldlt().solve(grad);
      const double decrement_sq = -grad.dot(step);
      ++sol.newton_iterations;
      if (!(decrement_sq > 0.0) || !std::isfinite(decrement_sq)) break;
      if (decrement_sq / 2.0 <= options.newton_tolerance) break;

      const double f0 = barrier_value(p, s, t);
      double alpha = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
        const Eigen::VectorXd trial = s + alpha * step;
        const double ft = barrier_value(p, trial, t);
        if (ft <= f0 - 0.01 * alpha * decrement_sq) {
          moved = (trial - s).cwiseAbs().maxCoeff() > 0.0;
          s = trial;
          break;
        }
      }
      if (!moved) break;
    }

    sol.duality_gap = total_constraints / t;
    if (sol.duality_gap <= options.gap_tolerance) break;
    t *= options.t_multiplier;
  }

  const Eigen::VectorXd slack = p.b - p.A * s;
  const auto duals = fit_multipliers(p, s, t);
  sol.rates.assign(s.data(), s.data() + n);
  sol.slacks.assign(slack.data(), slack.data() + m);
  sol.multipliers.assign(duals.lambda.data(), duals.lambda.data() + m);
  sol.objective = 0.0;
  for (Eigen::Index f = 0; f < n; ++f) sol.objective += p.w(f) * p.utilities[f].value(s(f));
  sol.kkt_residual = duals.residual;
  sol.converged =
      sol.duality_gap <= options.gap_tolerance && sol.kkt_residual <= options.kkt_tolerance;
  return sol;
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tolerance, int* evaluations) {
  if (!(hi > lo)) throw DomainError("golden-section search needs lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int count = 2;
  while (b - a > tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++count;
  }
  if (evaluations) *evaluations = count;
  return 0.5 * (a + b);
}

}  // namespace wlanrr
