#pragma once

#include <cstdint>
#include <random>

namespace nrs {

/// Seeded generator with a fixed uniform mapping.
///
/// std::uniform_real_distribution is implementation-defined, which would break
/// byte-identical reports across standard libraries; the 53-bit mapping below
/// is pinned instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return engine_() % n;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nrs
