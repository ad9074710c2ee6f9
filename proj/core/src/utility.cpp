#include "wlanrr/utility.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "wlanrr/error.hpp"

namespace wlanrr {

namespace {

bool finite(double v) { return std::isfinite(v); }

// (x^(1-alpha) - 1) / (1 - alpha), log at alpha = 1, and its derivatives.
double crra(double x, double alpha) {
  if (alpha == 1.0) return std::log(x);
  return std::expm1((1.0 - alpha) * std::log(x)) / (1.0 - alpha);
}
double crra_d1(double x, double alpha) { return std::pow(x, -alpha); }
double crra_d2(double x, double alpha) { return -alpha * std::pow(x, -alpha - 1.0); }

}  // namespace

const char* to_string(UtilityFamily family) {
  switch (family) {
    case UtilityFamily::kLog:
      return "log";
    case UtilityFamily::kIsoElastic:
      return "iso-elastic";
    case UtilityFamily::kHara:
      return "hara";
    case UtilityFamily::kLinExp:
      return "lin-exp";
    case UtilityFamily::kPowerRiskAversion:
      return "power-risk-aversion";
  }
  return "unknown";
}

Utility Utility::log() { return {UtilityFamily::kLog, 1.0, 0.0, 1.0}; }

Utility Utility::iso_elastic(double alpha) {
  if (!(alpha >= 0.0) || !finite(alpha)) throw DomainError("iso-elastic alpha must be >= 0");
  return {UtilityFamily::kIsoElastic, alpha, 0.0, 1.0};
}

Utility Utility::hara(double alpha, double beta, double gamma) {
  if (!finite(alpha) || !finite(beta) || !finite(gamma)) {
    throw DomainError("HARA parameters must be finite");
  }
  if (alpha == 0.0) throw DomainError("HARA alpha = 0 is the constant utility");
  if (gamma == 0.0) throw DomainError("HARA gamma must be nonzero");
  // U' = (alpha / gamma) (beta + x/gamma)^(-alpha)
  if (!(alpha / gamma > 0.0)) throw DomainError("HARA needs alpha / gamma > 0 to be increasing");
  return {UtilityFamily::kHara, alpha, beta, gamma};
}

Utility Utility::lin_exp(double alpha, double beta) {
  if (!(alpha >= 0.0 && beta >= 0.0) || !finite(alpha) || !finite(beta)) {
    throw DomainError("lin-exp needs alpha, beta >= 0");
  }
  return {UtilityFamily::kLinExp, alpha, beta, 1.0};
}

Utility Utility::power_risk_aversion(double alpha, double beta) {
  if (!(alpha >= 0.0 && beta >= 0.0) || !finite(alpha) || !finite(beta)) {
    throw DomainError("power risk aversion needs alpha, beta >= 0");
  }
  return {UtilityFamily::kPowerRiskAversion, alpha, beta, 1.0};
}

bool Utility::in_domain(double x) const {
  if (!finite(x)) return false;
  switch (family_) {
    case UtilityFamily::kLog:
    case UtilityFamily::kIsoElastic:
    case UtilityFamily::kPowerRiskAversion:
      return x > 0.0;
    case UtilityFamily::kLinExp:
      return x >= 0.0;
    case UtilityFamily::kHara:
      return beta_ + x / gamma_ > 0.0;
  }
  return false;
}

void Utility::check(double x) const {
  if (!in_domain(x)) {
    std::ostringstream msg;
    msg << describe() << " is undefined at x = " << x;
    throw DomainError(msg.str());
  }
}

double Utility::value(double x) const {
  check(x);
  switch (family_) {
    case UtilityFamily::kLog:
      return std::log(x);
    case UtilityFamily::kIsoElastic:
      return crra(x, alpha_);
    case UtilityFamily::kHara: {
      const double w = beta_ + x / gamma_;
      if (alpha_ == 1.0) return std::log(w);
      return alpha_ / (1.0 - alpha_) * std::expm1((1.0 - alpha_) * std::log(w));
    }
    case UtilityFamily::kLinExp:
      return x - beta_ * std::exp(-alpha_ * x);
    case UtilityFamily::kPowerRiskAversion: {
      const double g = crra(x, alpha_);
      if (beta_ == 0.0) return g;
      return -std::expm1(-beta_ * g) / beta_;
    }
  }
  return 0.0;
}

double Utility::gradient(double x) const {
  check(x);
  switch (family_) {
    case UtilityFamily::kLog:
      return 1.0 / x;
    case UtilityFamily::kIsoElastic:
      return crra_d1(x, alpha_);
    case UtilityFamily::kHara: {
      const double w = beta_ + x / gamma_;
      return alpha_ / gamma_ * std::pow(w, -alpha_);
    }
    case UtilityFamily::kLinExp:
      return 1.0 + alpha_ * beta_ * std::exp(-alpha_ * x);
    case UtilityFamily::kPowerRiskAversion:
      return std::exp(-beta_ * crra(x, alpha_)) * crra_d1(x, alpha_);
  }
  return 0.0;
}

double Utility::curvature(double x) const {
  check(x);
  switch (family_) {
    case UtilityFamily::kLog:
      return -1.0 / (x * x);
    case UtilityFamily::kIsoElastic:
      return crra_d2(x, alpha_);
    case UtilityFamily::kHara: {
      const double w = beta_ + x / gamma_;
      return -alpha_ * alpha_ / (gamma_ * gamma_) * std::pow(w, -alpha_ - 1.0);
    }
    case UtilityFamily::kLinExp:
      return -alpha_ * alpha_ * beta_ * std::exp(-alpha_ * x);
    case UtilityFamily::kPowerRiskAversion: {
      const double d1 = crra_d1(x, alpha_);
      return std::exp(-beta_ * crra(x, alpha_)) * (crra_d2(x, alpha_) - beta_ * d1 * d1);
    }
  }
  return 0.0;
}

std::string Utility::describe() const {
  std::ostringstream out;
  out << to_string(family_);
  switch (family_) {
    case UtilityFamily::kLog:
      break;
    case UtilityFamily::kIsoElastic:
      out << "(alpha=" << alpha_ << ")";
      break;
    case UtilityFamily::kHara:
      out << "(alpha=" << alpha_ << ", beta=" << beta_ << ", gamma=" << gamma_ << ")";
      break;
    case UtilityFamily::kLinExp:
    case UtilityFamily::kPowerRiskAversion:
      out << "(alpha=" << alpha_ << ", beta=" << beta_ << ")";
      break;
  }
  return out.str();
}

bool is_log_domain_concave(const Utility& u, const LogGrid& grid) {
  if (!(grid.x_min > 0.0 && grid.x_max > grid.x_min) || grid.points < 3) {
    throw DomainError("log-domain grid needs 0 < x_min < x_max and >= 3 points");
  }
  const double t_lo = std::log(grid.x_min);
  const double t_hi = std::log(grid.x_max);
  const double dt = (t_hi - t_lo) / (grid.points - 1);
  std::vector<double> f(static_cast<std::size_t>(grid.points));
  for (int k = 0; k < grid.points; ++k) f[k] = u.value(std::exp(t_lo + k * dt));
  for (std::size_t k = 1; k + 1 < f.size(); ++k) {
    if (f[k - 1] - 2.0 * f[k] + f[k + 1] > 1e-9) return false;
  }
  return true;
}

}  // namespace wlanrr
