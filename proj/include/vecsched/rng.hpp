#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vecsched {

// Derives an independent stream seed from a base seed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seeded generator with hand-rolled transforms. std:: distributions are
// implementation-defined, so every draw here goes through the raw engine
// to keep byte-identical runs across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform double in [0, 1), 53 mantissa bits.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n >= 1.
  int uniform_int(int n) {
    return static_cast<int>(uniform() * static_cast<double>(n));
  }

  // Exponential with the given rate (mean 1/rate), via inverse CDF.
  double exponential(double rate) {
    return -std::log(1.0 - uniform()) / rate;
  }

  // Standard normal via Box-Muller. No caching of the second variate so the
  // draw count per call is fixed.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Lognormal multiplier with median 1.
  double lognormal(double sigma) { return std::exp(sigma * normal()); }

  // First k entries of a Fisher-Yates shuffle of {0, ..., n-1}.
  template <typename OutIt>
  void sample_without_replacement(int n, int k, OutIt out) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k && i < n; ++i) {
      const int j = i + uniform_int(n - i);
      std::swap(pool[i], pool[j]);
      *out++ = pool[i];
    }
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace vecsched
