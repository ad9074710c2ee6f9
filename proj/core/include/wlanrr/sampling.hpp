#pragma once

// Seeded random generators shared by the property sweeps, the boundary
// sampler and the MAC simulator. Everything is deterministic given the
// seed and independent of the standard library's distribution
// implementations.

#include <cstdint>
#include <random>
#include <vector>

namespace wlanrr {

/// splitmix64 finaliser; used to derive independent substream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed, 0)) {}

  /// Independent generator for substream `stream` of `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(std::mt19937_64(mix_seed(seed, stream + 1)));
  }

  std::uint64_t next() { return engine_(); }
  /// Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller).
  double normal();
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

 private:
  explicit Rng(std::mt19937_64 engine) : engine_(engine) {}
  std::mt19937_64 engine_;
};

/// Uniform sample from the open (n-1)-simplex: y_i > 0, sum y_i = 1.
std::vector<double> sample_simplex(Rng& rng, std::size_t n);

/// A pair (r, z) with 0 <= r_j < 1, sum r = n - 1, r . z = 0, |z| = 1.
struct PostPair {
  std::vector<double> r;
  std::vector<double> z;
};

/// Nondegenerate generator: r_j = 1 - w_j with w uniform on the open
/// simplex, z a Gaussian vector projected orthogonal to r and normalised.
PostPair sample_post_pair(Rng& rng, std::size_t n);

}  // namespace wlanrr
