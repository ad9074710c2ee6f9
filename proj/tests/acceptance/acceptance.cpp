// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iterator>
#include <limits>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "wlanrr/wlanrr.hpp"
#include "wlanrr_cli/cli.hpp"

namespace {

using namespace wlanrr;

struct Outcome {
  bool passed = true;
  std::string detail;
};

constexpr double kAs[] = {1.0 / 9.0, 0.5, 1.0};

double worst(double current, double value) { return std::max(current, value); }

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// 1. Built-in example optima through the command-line entry point.
Outcome paper_example() {
  const struct {
    const char* name;
    double expected;
  } cases[] = {{"log", 0.2094}, {"u1", 0.3767}, {"u2", 0.3516}};
  Outcome o;
  for (const auto& c : cases) {
    std::ostringstream out;
    std::ostringstream err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run({"wlanrr", "num", "--paper-example", c.name}, out, err);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double x2 = std::nan("");
    if (code == 0) x2 = nlohmann::json::parse(out.str())["x2_star"].get<double>();
    const bool ok = code == 0 && std::abs(x2 - c.expected) <= 2e-3 && seconds < 5.0;
    o.passed = o.passed && ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s x2*=%.6f (want %.4f, %.3fs) ", c.name, x2, c.expected, seconds);
    o.detail += buf;
  }
  return o;
}

// 2. h(x*) = 1 and its attempt-probability form.
Outcome boundary_identities() {
  double worst_h = 0.0;
  double worst_tau = 0.0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (double a : kAs) {
      Rng rng(mix_seed(100 + n, static_cast<std::uint64_t>(a * 1000)));
      const auto cfg = WlanConfig::homogeneous(n, a);
      for (int k = 0; k < 1000; ++k) {
        const auto p = boundary_scale(sample_simplex(rng, n), cfg);
        worst_h = worst(worst_h, std::abs(boundary_h(p.x_star, cfg) - 1.0));
        const auto tau = x_to_tau(p.x_star);
        double sum = 0.0;
        double idle = 1.0;
        for (double t : tau) {
          sum += t;
          idle *= 1.0 - t;
        }
        worst_tau = worst(worst_tau, std::abs(sum + (1.0 - a) * idle - 1.0));
      }
    }
  }
  return {worst_h <= 1e-10 && worst_tau <= 1e-10,
          fmt("max |h-1| = %.2e, max tau-form residual = %.2e over 12000 points", worst_h, worst_tau)};
}

// 3. Two stations: x1 x2 = a on the boundary.
Outcome two_station_closed_form() {
  double worst_err = 0.0;
  for (double a : kAs) {
    Rng rng(mix_seed(300, static_cast<std::uint64_t>(a * 1000)));
    const auto cfg = WlanConfig::homogeneous(2, a);
    for (int k = 0; k < 1000; ++k) {
      const auto p = boundary_scale(sample_simplex(rng, 2), cfg);
      worst_err = worst(worst_err, std::abs(p.x_star[0] * p.x_star[1] - a));
    }
  }
  return {worst_err <= 1e-9, fmt("max |x1 x2 - a| = %.2e over 3000 directions", worst_err)};
}

// 4. Tangent plane passes through s*, and is orthogonal to the boundary.
Outcome tangent_consistency() {
  Rng rng(400);
  double worst_plane = 0.0;
  double worst_orth = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 4));
    WlanConfig cfg;
    cfg.a = kAs[k % 3];
    for (std::size_t i = 0; i < n; ++i) {
      cfg.payload.push_back(rng.uniform(0.5, 2.0));
      cfg.burst_min.push_back(1);
      cfg.burst_max.push_back(rng.integer(1, 3));
    }
    const auto p = boundary_scale(sample_simplex(rng, n), cfg);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += p.normal[i] * p.s_star[i];
    worst_plane = worst(worst_plane, std::abs(dot - p.rhs) / p.rhs);
    worst_orth = worst(worst_orth, orthogonality_check(p.x_star, cfg).max_relative());
  }
  return {worst_plane <= 1e-9 && worst_orth <= 1e-5,
          fmt("max plane residual = %.2e, max orthogonality residual = %.2e over 100 points",
              worst_plane, worst_orth)};
}

// 5. Complement of the region is strictly convex.
Outcome complement_convexity() {
  double smallest = std::numeric_limits<double>::infinity();
  double coincide = 0.0;
  bool ok = true;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (double a : kAs) {
      Rng rng(mix_seed(500 + n, static_cast<std::uint64_t>(a * 1000)));
      const auto cfg = WlanConfig::homogeneous(n, a);
      for (int k = 0; k < 10000; ++k) {
        const auto p = boundary_scale(sample_simplex(rng, n), cfg);
        const auto q = boundary_scale(sample_simplex(rng, n), cfg);
        const double m = complement_convexity_margin(p.x_star, q.x_star, cfg);
        smallest = std::min(smallest, m);
        if (!(m > 0.0)) ok = false;
        if (k % 100 == 0) coincide = worst(coincide, std::abs(complement_convexity_margin(p.x_star, p.x_star, cfg)));
      }
    }
  }
  // At a coinciding pair the margin is the boundary residual itself.
  ok = ok && coincide <= 1e-10;
  return {ok, fmt("min margin = %.3e over 120000 pairs, max |margin| at coinciding pairs = %.1e",
                  smallest, coincide)};
}

// 6. Subsets lie in the region and are maximal.
Outcome subset_containment() {
  int misclassified = 0;
  int not_outside = 0;
  int total = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (double a : kAs) {
      Rng rng(mix_seed(600 + n, static_cast<std::uint64_t>(a * 1000)));
      const auto cfg = WlanConfig::homogeneous(n, a);
      const auto p = boundary_scale(sample_simplex(rng, n), cfg);
      const auto subset = make_subset(p.x_star, cfg);
      for (int k = 0; k < 1000; ++k) {
        const auto w = sample_simplex(rng, n);
        const double u = rng.uniform();
        std::vector<double> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = u * w[i] / subset.alpha[i];
        ++total;
        if (in_rate_region(s, cfg).verdict == RegionVerdict::kOutside) ++misclassified;
      }
      for (double eps : {0.01, 0.05}) {
        auto out = p.s_star;
        for (auto& v : out) v *= 1.0 + eps;
        if (in_rate_region(out, cfg).verdict != RegionVerdict::kOutside || subset_contains(out, subset)) {
          ++not_outside;
        }
      }
    }
  }
  return {misclassified == 0 && not_outside == 0,
          fmt("%.0f of %.0f subset points outside the region, %.0f scaled boundary points not outside",
              misclassified, total, not_outside)};
}

// 7. sum_{i<j} z_i z_j < 0 on generated pairs.
Outcome post_inequality() {
  Rng rng(700);
  double largest = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 10000; ++k) {
    const auto n = static_cast<std::size_t>(2 + k % 7);
    const auto pair = sample_post_pair(rng, n);
    largest = std::max(largest, post_inequality_check(pair.r, pair.z));
  }
  return {largest < 0.0, fmt("max value = %.3e over 10000 pairs, n in 2..8", largest)};
}

// 8. Monte Carlo agrees with the analytic throughput.
Outcome monte_carlo() {
  Rng rng(800);
  int pass = 0;
  int total = 0;
  double worst_z = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto n = static_cast<std::size_t>(2 + k % 3);
    SimConfig sim;
    sim.wlan.a = kAs[k % 3];
    std::vector<double> bursts;
    for (std::size_t i = 0; i < n; ++i) {
      sim.wlan.payload.push_back(rng.uniform(0.5, 2.0));
      sim.wlan.burst_min.push_back(1);
      sim.wlan.burst_max.push_back(3);
      sim.tau.push_back(rng.uniform(0.01, 0.5));
      bursts.push_back(rng.integer(1, 3));
    }
    sim.bursts = BurstVector(bursts);
    sim.slots = 1'000'000;
    sim.seed = mix_seed(801, static_cast<std::uint64_t>(k));
    for (const auto& z : compare_to_model(sim)) {
      ++total;
      if (z.exact || std::abs(z.z) <= 3.0) ++pass;
      worst_z = worst(worst_z, std::abs(z.z));
    }
  }
  const double fraction = static_cast<double>(pass) / total;
  return {fraction >= 0.95,
          fmt("%.0f/%.0f station z-scores within 3, max |z| = %.2f", pass, total, worst_z)};
}

// 9. Log-domain concavity gate for iso-elastic utilities.
Outcome utility_gate() {
  bool ok = true;
  std::string detail;
  for (double alpha : {1.0, 2.0, 5.0, 0.5}) {
    const bool concave = is_log_domain_concave(Utility::iso_elastic(alpha));
    ok = ok && concave == (alpha >= 1.0);
    detail += fmt("alpha=%.1f:", alpha) + (concave ? "concave " : "not-concave ");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const struct {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  } criteria[] = {
      {"1 built-in example optima", paper_example, 15.0},
      {"2 boundary identities", boundary_identities, 10.0},
      {"3 two-station closed form", two_station_closed_form, 0.0},
      {"4 tangent and orthogonality", tangent_consistency, 0.0},
      {"5 complement strictly convex", complement_convexity, 60.0},
      {"6 subset containment and maximality", subset_containment, 0.0},
      {"7 pairwise-sum inequality", post_inequality, 0.0},
      {"8 Monte Carlo vs analytic", monte_carlo, 60.0},
      {"9 utility log-domain gate", utility_gate, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
      o.passed = false;
      o.detail += " [over time budget]";
    }
    if (!o.passed) ++failures;
    std::printf("%s  %-38s %8.3fs  %s\n", o.passed ? "PASS" : "FAIL", c.name, seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
