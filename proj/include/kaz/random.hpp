#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace kaz {

/// Seeded generator whose draws are identical on every platform: the engine is
/// fully specified and the range reduction below is ours, not the library's.
class Rng {
 public:
  static constexpr std::uint64_t default_seed = 20240601;

  explicit Rng(std::uint64_t seed = default_seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kaz
