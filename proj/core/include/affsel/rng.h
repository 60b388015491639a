#pragma once

#include <cstdint>
#include <random>

namespace affsel {

// SplitMix64 finalizer. Used to derive substream seeds and counter-based
// uniforms; not used as a generator on its own.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t Mix64(std::uint64_t a, std::uint64_t b) {
  return Mix64(a ^ Mix64(b + 0x632be59bd9b4e019ULL));
}

// 53-bit mantissa fill, uniform on [0, 1).
constexpr double ToUnitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Stateless uniform keyed by (seed, a, b). Two callers asking for the same
// key get the same value, which is what paired Monte Carlo estimates need.
constexpr double CounterUniform(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b) {
  return ToUnitInterval(Mix64(Mix64(seed, a), b));
}

// Seedable, splittable generator. Every (run, node) pair gets its own
// substream so per-node decisions never depend on iteration order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix64(seed)) {}

  static Rng Substream(std::uint64_t master_seed, std::uint64_t stream) {
    return Rng(Mix64(master_seed, stream));
  }

  double Uniform() { return ToUnitInterval(engine_()); }

  // Always consumes exactly one draw, including for p = 0 or p = 1.
  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform integer on [lo, hi].
  std::uint64_t UniformInt(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace affsel
