#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace sna {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// xoshiro256++, seeded through splitmix64. Fixed algorithm so that seeded
// runs reproduce bit-identically across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    for (auto& word : state_) word = splitmix64(seed);
  }

  uint64_t next() {
    const uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 bits of randomness.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, bound); bound must be > 0.
  uint64_t below(uint64_t bound) {
    const uint64_t mask = ~0ull >> std::countl_zero(bound | 1);
    uint64_t x;
    do {
      x = next() & mask;
    } while (x >= bound);
    return x;
  }

 private:
  std::array<uint64_t, 4> state_{};
};

// Stateless mix of several words into one, for seed derivation.
inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  return splitmix64(s);
}

}  // namespace sna
