#pragma once

// Deterministic randomness.
//
// All draws go through Rng, a thin wrapper over std::mt19937_64 that maps the
// raw 64-bit stream to ranges itself.  Standard-library distributions are
// deliberately not used: their outputs differ across implementations, and
// runs must be reproducible from (algorithm, seed, draw order) alone.

#include <cstdint>
#include <random>
#include <stdexcept>

namespace twohop {

// Seed mixing / derivation (splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  return mix64(mix64(mix64(mix64(base) ^ a) ^ b) ^ c);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // 53 uniform bits (the top bits of one draw).
  std::uint64_t next_u53() { return gen_() >> 11; }

  // Uniform integer in [0, bound); fixed-point multiply, one draw per call.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng: zero bound");
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(gen_()) * bound) >> 64);
  }

  // In-place Fisher-Yates; consumes n-1 draws.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace twohop
