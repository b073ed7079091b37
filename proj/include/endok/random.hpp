#pragma once

#include <cstdint>
#include <random>

namespace endok {

/// Seeded sampler. The engine is fully specified by the standard, and the
/// range reduction is done here, so sequences are identical on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  bool coin() { return (eng_() & 1) != 0; }

  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace endok
