#pragma once

#include <cstdint>
#include <random>

namespace latrep {

// Deterministic RNG for the verification suites.  Only integer draws are
// exposed so that reports are byte-identical for a fixed seed; bounded draws
// use rejection sampling instead of std::uniform_int_distribution (whose
// output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform in [0, n), n >= 1.
  int below(int n) {
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t limit = ~0ull - ~0ull % un;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return static_cast<int>(v % un);
  }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<int>(hi - lo + 1)));
  }

  // True with probability num/den.
  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace latrep
