#pragma once

#include <string>

namespace wlanrr {

enum class UtilityFamily { kLog, kIsoElastic, kHara, kLinExp, kPowerRiskAversion };

const char* to_string(UtilityFamily family);

/// Increasing concave utility of a flow rate.
///
///   log                      U(x) = log x
///   iso-elastic(alpha)       U(x) = (x^(1-alpha) - 1) / (1 - alpha)
///   hara(alpha, beta, gamma) U(x) = alpha / (1 - alpha) [(beta + x/gamma)^(1-alpha) - 1]
///   lin-exp(alpha, beta)     U(x) = x - beta exp(-alpha x)
///   power-risk-aversion(alpha, beta)
///                            U(x) = (1 - exp(-beta g(x))) / beta,
///                            g = iso-elastic(alpha)
///
/// Limit cases are dispatched explicitly: iso-elastic and the inner
/// power-risk-aversion term fall back to log at alpha = 1, power risk
/// aversion becomes iso-elastic at beta = 0 and HARA becomes
/// log(beta + x/gamma) at alpha = 1.
class Utility {
 public:
  static Utility log();
  static Utility iso_elastic(double alpha);
  static Utility hara(double alpha, double beta, double gamma);
  static Utility lin_exp(double alpha, double beta);
  static Utility power_risk_aversion(double alpha, double beta);

  UtilityFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  bool in_domain(double x) const;

  /// Throw DomainError outside the family's domain.
  double value(double x) const;
  double gradient(double x) const;
  double curvature(double x) const;  // second derivative

  std::string describe() const;

 private:
  Utility(UtilityFamily family, double alpha, double beta, double gamma)
      : family_(family), alpha_(alpha), beta_(beta), gamma_(gamma) {}

  void check(double x) const;

  UtilityFamily family_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double gamma_ = 1.0;
};

/// Grid over which U(exp(t)) is tested, in the original rate variable.
struct LogGrid {
  double x_min = 0.1;
  double x_max = 100.0;
  int points = 1001;
};

/// Second differences of t -> U(exp(t)) on an evenly spaced t-grid; false
/// if any exceeds 1e-9.
bool is_log_domain_concave(const Utility& u, const LogGrid& grid = {});

}  // namespace wlanrr
