#include "wlanrr/sampling.hpp"

#include <cmath>
#include <numbers>

#include "wlanrr/error.hpp"

namespace wlanrr {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  // 53 random bits, shifted by half an ulp so 0 and 1 are never returned.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

std::vector<double> sample_simplex(Rng& rng, std::size_t n) {
  if (n == 0) throw DomainError("simplex dimension must be >= 1");
  std::vector<double> y(n);
  double total = 0.0;
  for (auto& v : y) {
    v = -std::log(rng.uniform());
    total += v;
  }
  for (auto& v : y) v /= total;
  return y;
}

PostPair sample_post_pair(Rng& rng, std::size_t n) {
  if (n < 2) throw DomainError("Post pair needs n >= 2");
  PostPair pair;
  const auto w = sample_simplex(rng, n);
  pair.r.resize(n);
  for (std::size_t j = 0; j < n; ++j) pair.r[j] = 1.0 - w[j];

  double rr = 0.0;
  for (double v : pair.r) rr += v * v;

  // Project twice; one Gram-Schmidt pass leaves O(eps) residue in r . z.
  pair.z.resize(n);
  for (auto& v : pair.z) v = rng.normal();
  for (int pass = 0; pass < 2; ++pass) {
    double rz = 0.0;
    for (std::size_t j = 0; j < n; ++j) rz += pair.r[j] * pair.z[j];
    for (std::size_t j = 0; j < n; ++j) pair.z[j] -= rz / rr * pair.r[j];
  }
  double norm = 0.0;
  for (double v : pair.z) norm += v * v;
  norm = std::sqrt(norm);
  for (auto& v : pair.z) v /= norm;
  return pair;
}

}  // namespace wlanrr
