#ifndef GKM_RNG_HPP
#define GKM_RNG_HPP

#include <cstdint>
#include <random>

namespace gkm {

// Seeded generator with platform-stable output (mt19937_64 sequence plus
// plain modular reduction, no distribution objects).
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(uint64_t seed) : gen(seed) {}

  long below(long n) { return static_cast<long>(gen() % static_cast<uint64_t>(n)); }
  // Inclusive bounds.
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }
};

}  // namespace gkm

#endif
