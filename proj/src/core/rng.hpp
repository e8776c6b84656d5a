#pragma once

#include <cstdint>

namespace entrss {

// splitmix64 step; advances state and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ seeded from (master_seed, stream_id). Distinct stream ids give
// independent-behaving sequences; the mapping is pure, so results never depend
// on scheduling or call order.
class rng_stream {
 public:
  rng_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    std::uint64_t x = master_seed;
    (void)splitmix64(x);
    x ^= 0xd1342543de82ef95ULL * (stream_id + 1);
    s_[0] = splitmix64(x);
    s_[1] = splitmix64(x);
    s_[2] = splitmix64(x);
    s_[3] = splitmix64(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe under log().
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform strictly inside (0,1); safe under log() on either side.
  double uniform_strict() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal();

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t s_[4];
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Substream derivation for replicate/phase/row separation: the resulting
// stream is a pure function of (master, tag, index, attempt).
inline rng_stream substream(std::uint64_t master, std::uint64_t tag,
                            std::uint64_t index, std::uint64_t attempt = 0) {
  std::uint64_t x = master ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
  std::uint64_t mixed = splitmix64(x) ^ (0xbf58476d1ce4e5b9ULL * attempt);
  return rng_stream(mixed, index);
}

}  // namespace entrss
