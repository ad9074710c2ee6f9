#include "wlanrr/rate_region.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "wlanrr/error.hpp"
#include "wlanrr/sampling.hpp"
#include "wlanrr/tolerances.hpp"

namespace wlanrr {
namespace {

constexpr double kA = 1.0 / 9.0;

WlanConfig random_config(Rng& rng, std::size_t n) {
  WlanConfig cfg;
  cfg.a = rng.uniform(0.05, 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    cfg.payload.push_back(rng.uniform(0.2, 5.0));
    cfg.burst_min.push_back(1);
    cfg.burst_max.push_back(rng.integer(1, 5));
  }
  return cfg;
}

TEST(BoundaryH, Examples) {
  EXPECT_DOUBLE_EQ(boundary_h(AttemptVector{0.0, 0.0, 0.0}, 0.3), 0.7);
  EXPECT_NEAR(boundary_h(AttemptVector{1.0 / 3.0, 1.0 / 3.0}, kA), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(boundary_h(AttemptVector{1.0, 1.0}, 1.0), 1.0);
  EXPECT_THROW(boundary_h(AttemptVector{1.0}, WlanConfig::homogeneous(2, kA)), DimensionError);
}

TEST(BoundaryH, StrictlyIncreasingInEachCoordinate) {
  Rng rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 6));
    const double a = rng.uniform(0.01, 3.0);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(0.0, 4.0);
    const auto j = static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 1));
    const double step = 1e-5 * std::max(1.0, x[j]);
    auto up = x;
    up[j] += step;
    EXPECT_GT(boundary_h(AttemptVector(up), a), boundary_h(AttemptVector(x), a));
  }
}

TEST(BoundaryScale, SymmetricExamples) {
  const auto p = boundary_scale(std::vector<double>{0.5, 0.5}, WlanConfig::homogeneous(2, kA));
  EXPECT_NEAR(p.lambda_star, 2.0 / 3.0, 1e-11);
  EXPECT_NEAR(p.x_star[0], 1.0 / 3.0, 1e-11);
  EXPECT_NEAR(p.x_star[1], 1.0 / 3.0, 1e-11);
  EXPECT_NEAR(p.s_star[0], 0.375, 1e-11);
  EXPECT_NEAR(p.s_star[1], 0.375, 1e-11);

  const auto q = boundary_scale(std::vector<double>{0.5, 0.5}, WlanConfig::homogeneous(2, 1.0));
  EXPECT_NEAR(q.x_star[0], 1.0, 1e-11);
  const auto tau = x_to_tau(q.x_star);
  EXPECT_NEAR(tau[0], 0.5, 1e-11);
  EXPECT_NEAR(tau[1], 0.5, 1e-11);
}

TEST(BoundaryScale, Errors) {
  EXPECT_THROW(boundary_scale(std::vector<double>{1.0}, WlanConfig::homogeneous(1, kA)),
               BoundaryUnattainable);
  const auto cfg = WlanConfig::homogeneous(2, kA);
  EXPECT_THROW(boundary_scale(std::vector<double>{1.0, 0.0}, cfg), DomainError);
  EXPECT_THROW(boundary_scale(std::vector<double>{1.0, -0.5}, cfg), DomainError);
  EXPECT_THROW(boundary_scale(std::vector<double>{1.0, 1.0, 1.0}, cfg), DimensionError);
}

TEST(BoundaryScale, NormalisesDirection) {
  const auto cfg = WlanConfig::homogeneous(2, kA);
  const auto p = boundary_scale(std::vector<double>{2.0, 2.0}, cfg);
  EXPECT_DOUBLE_EQ(p.direction[0], 0.5);
  EXPECT_NEAR(p.x_star[0], 1.0 / 3.0, 1e-11);
}

TEST(BoundaryScale, TwoStationClosedForm) {
  // Clearing denominators in h(x) = 1 for n = 2 gives x1 x2 = a.
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    auto cfg = random_config(rng, 2);
    const auto p = boundary_scale(sample_simplex(rng, 2), cfg);
    EXPECT_NEAR(p.x_star[0] * p.x_star[1], cfg.a, 1e-9 * std::max(1.0, cfg.a));
  }
}

TEST(BoundaryScale, MaximisesThroughputAlongRay) {
  // Independent route: the boundary scale is the argmax of lambda / X.
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 5));
    const auto cfg = random_config(rng, n);
    const auto y = sample_simplex(rng, n);
    const auto p = boundary_scale(y, cfg);
    std::vector<double> xbar(n);
    std::vector<double> bursts(n);
    for (std::size_t i = 0; i < n; ++i) {
      bursts[i] = cfg.burst_max[i];
      xbar[i] = y[i] / (cfg.payload[i] * bursts[i]);
    }
    const double oracle = testing::ray_scale_argmax(xbar, bursts, cfg.a);
    EXPECT_NEAR(p.lambda_star, oracle, 1e-6 * oracle);
  }
}

TEST(BoundaryScale, IdentitiesAtSampledPoints) {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 6));
    const auto cfg = random_config(rng, n);
    const auto p = boundary_scale(sample_simplex(rng, n), cfg);

    EXPECT_LE(std::abs(boundary_h(p.x_star, cfg) - 1.0), tol::kBoundaryResidual);

    const auto tau = x_to_tau(p.x_star);
    double sum_tau = 0.0;
    double idle = 1.0;
    for (double t : tau) {
      sum_tau += t;
      idle *= 1.0 - t;
    }
    EXPECT_NEAR(sum_tau + (1.0 - cfg.a) * idle, 1.0, 1e-10);

    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += p.normal[i] * p.s_star[i];
    EXPECT_NEAR(dot, p.rhs, 1e-9 * p.rhs);
    for (double b : p.normal) EXPECT_GT(b, 0.0);
  }
}

TEST(BoundaryScale, AttemptRatesIgnoreBurstsOnSameRay) {
  // h never references N: fixing xbar directly, the root is the same for
  // any bursts, while the throughputs differ.
  const std::vector<double> y = {0.2, 0.3, 0.5};
  WlanConfig one{0.4, {1.0, 1.0, 1.0}, {1, 1, 1}, {1, 1, 1}};
  WlanConfig four{0.4, {0.25, 0.25, 0.25}, {1, 1, 1}, {4, 4, 4}};
  const auto p1 = boundary_scale(y, one);
  const auto p4 = boundary_scale(y, four);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(p1.x_star[i], p4.x_star[i], 1e-12);
  const double sum1 = std::accumulate(p1.s_star.begin(), p1.s_star.end(), 0.0);
  const double sum4 = std::accumulate(p4.s_star.begin(), p4.s_star.end(), 0.0);
  EXPECT_NE(sum1, sum4);
}

TEST(TangentNormal, Examples) {
  const auto cfg = WlanConfig::homogeneous(2, kA);
  const auto plane = tangent_normal(AttemptVector{1.0 / 3.0, 1.0 / 3.0}, cfg);
  EXPECT_NEAR(plane.normal[0], 0.75, 1e-15);
  EXPECT_NEAR(plane.normal[1], 0.75, 1e-15);
  EXPECT_NEAR(plane.rhs, 9.0 / 16.0, 1e-15);
  EXPECT_NEAR(plane.normal[0] * 0.375 + plane.normal[1] * 0.375, plane.rhs, 1e-15);

  const auto cfg2 = WlanConfig::homogeneous(2, kA, 1.0, 2);
  const auto plane2 = tangent_normal(AttemptVector{1.0 / 3.0, 1.0 / 3.0}, cfg2);
  EXPECT_NEAR(plane2.normal[0], 21.0 / 32.0, 1e-15);
  EXPECT_NEAR(plane2.rhs, 9.0 / 16.0, 1e-15);

  EXPECT_THROW(tangent_normal(AttemptVector{0.5, 0.5}, cfg), PreconditionError);
}

TEST(Orthogonality, VanishesOnBoundary) {
  const auto cfg = WlanConfig::homogeneous(2, kA);
  EXPECT_LE(orthogonality_check(AttemptVector{1.0 / 3.0, 1.0 / 3.0}, cfg).max_relative(), 1e-5);

  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 4));
    auto cfg_n = random_config(rng, n);
    if (trial % 2 == 0) cfg_n = WlanConfig::homogeneous(3, kA);
    const auto p = boundary_scale(sample_simplex(rng, cfg_n.size()), cfg_n);
    EXPECT_LE(orthogonality_check(p.x_star, cfg_n).max_relative(), 1e-5);
  }
}

TEST(Orthogonality, MaterialOffBoundary) {
  const auto cfg = WlanConfig::homogeneous(2, kA);
  EXPECT_GT(orthogonality_check(AttemptVector{0.6, 0.6}, cfg).max_relative(), 1e-2);
  EXPECT_GT(orthogonality_check(AttemptVector{0.1, 0.2}, cfg).max_relative(), 1e-2);
}

TEST(Membership, Examples) {
  const auto cfg = WlanConfig::homogeneous(2, kA);
  EXPECT_EQ(in_rate_region(std::vector<double>{0.375, 0.375}, cfg).verdict, RegionVerdict::kBoundary);
  const auto inside = in_rate_region(std::vector<double>{0.2, 0.2}, cfg);
  EXPECT_EQ(inside.verdict, RegionVerdict::kInside);
  EXPECT_NEAR(inside.lambda, 0.2 / 0.375, 1e-10);
  const auto outside = in_rate_region(std::vector<double>{0.5, 0.5}, cfg);
  EXPECT_EQ(outside.verdict, RegionVerdict::kOutside);
  EXPECT_NEAR(outside.lambda, 0.5 / 0.375, 1e-10);
  EXPECT_EQ(in_rate_region(std::vector<double>{0.0, 0.0}, cfg).verdict, RegionVerdict::kInside);
}

TEST(Membership, ZeroComponentsAndSingleStation) {
  const auto cfg = WlanConfig::homogeneous(3, 0.2, 2.0);
  // One active station: supremum is its payload rate L.
  EXPECT_EQ(in_rate_region(std::vector<double>{1.5, 0.0, 0.0}, cfg).verdict, RegionVerdict::kInside);
  EXPECT_EQ(in_rate_region(std::vector<double>{2.5, 0.0, 0.0}, cfg).verdict, RegionVerdict::kOutside);
  // Two active stations with a silent third: compare to the two-station WLAN.
  const auto two = WlanConfig::homogeneous(2, 0.2, 2.0);
  const auto p = boundary_scale(std::vector<double>{0.3, 0.7}, two);
  const std::vector<double> s = {p.s_star[0], 0.0, p.s_star[1]};
  const auto m = in_rate_region(s, cfg);
  EXPECT_EQ(m.verdict, RegionVerdict::kBoundary) << m.lambda;
  EXPECT_THROW(in_rate_region(std::vector<double>{-0.1, 0.0, 0.0}, cfg), DomainError);
}

TEST(Membership, ScaledBoundaryPoints) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 5));
    const auto cfg = random_config(rng, n);
    const auto p = boundary_scale(sample_simplex(rng, n), cfg);
    EXPECT_EQ(in_rate_region(p.s_star, cfg).verdict, RegionVerdict::kBoundary);
    auto scaled = p.s_star;
    for (auto& v : scaled) v *= 0.99;
    EXPECT_EQ(in_rate_region(scaled, cfg).verdict, RegionVerdict::kInside);
    for (auto& v : scaled) v *= 1.02 / 0.99;
    EXPECT_EQ(in_rate_region(scaled, cfg).verdict, RegionVerdict::kOutside);
  }
}

TEST(SampleBoundary, TwoStationGrid) {
  const auto cfg = WlanConfig::homogeneous(2, kA);
  const auto pts = sample_boundary(cfg, 3, 0);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_DOUBLE_EQ(pts[0].direction[0], 0.25);
  EXPECT_DOUBLE_EQ(pts[0].direction[1], 0.75);
  EXPECT_DOUBLE_EQ(pts[1].direction[0], 0.5);
  EXPECT_DOUBLE_EQ(pts[2].direction[0], 0.75);
  for (const auto& p : pts) EXPECT_LE(std::abs(boundary_h(p.x_star, cfg) - 1.0), 1e-10);
}

TEST(SampleBoundary, DeterministicGivenSeed) {
  const auto cfg = WlanConfig::homogeneous(3, kA);
  const auto a = sample_boundary(cfg, 100, 77);
  const auto b = sample_boundary(cfg, 100, 77);
  const auto c = sample_boundary(cfg, 100, 78);
  ASSERT_EQ(a.size(), 100u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].x_star.vector(), b[k].x_star.vector());
    EXPECT_LE(std::abs(boundary_h(a[k].x_star, cfg) - 1.0), 1e-10);
  }
  EXPECT_NE(a[0].x_star.vector(), c[0].x_star.vector());
  EXPECT_THROW(sample_boundary(WlanConfig::homogeneous(1, kA), 3, 1), BoundaryUnattainable);
}

}  // namespace
}  // namespace wlanrr
