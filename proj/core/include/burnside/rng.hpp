#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace burnside {

// Seeded RNG for the randomized verification suites. std::mt19937_64 is
// bit-identical across platforms; bounds are reduced by modulo on purpose so
// the draw sequence does not depend on library-specific distribution code.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform-ish integer in [lo, hi], inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(next() % v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace burnside
