#pragma once

#include <cstdint>

namespace ipd {

// splitmix64, used to expand a user seed into generator state.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256** (Blackman & Vigna). Chosen because its output is a pure
// function of 64-bit integer arithmetic, so seeded runs reproduce exactly
// across platforms and compilers.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

// Independent substream for item `index` of a seeded batch. Streams are
// decorrelated by splitmix64 and independent of evaluation order, which keeps
// parallel sampling deterministic.
inline Xoshiro256 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 sm(seed);
  std::uint64_t base = sm.next();
  return Xoshiro256(base ^ (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
}

}  // namespace ipd
