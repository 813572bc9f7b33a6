#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pir {

/// Seeded randomness source. Bounded draws use rejection sampling on the
/// raw 64-bit stream so that a given seed produces the same sequence on
/// every platform (std::uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  /// Uniform draw from {0, ..., bound-1}.
  uint64_t below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pir
