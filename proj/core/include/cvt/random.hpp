#pragma once

#include <cmath>
#include <cstdint>

namespace cvt {

/// Deterministic random stream built on splitmix64.
///
/// Streams are cheap value types. `substream(seed, index)` derives an
/// independent stream from a root seed and a counter, so per-shot (or
/// per-shard) streams depend only on (seed, index) and never on how work
/// was split across workers.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  /// Counter-derived stream: same (seed, index) always yields the same
  /// sequence.
  static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 output at position `index+1` of the stream seeded by
    // `seed`, used as the child stream's initial state.
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    return RandomStream(mix(z));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform draw in (0, 1]; never returns 0 so log() is safe.
  double uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the second variate of each pair is
  /// cached, keeping the draw count deterministic.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cvt
