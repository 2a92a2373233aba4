#pragma once

#include <cstdint>
#include <vector>

namespace hvc {

/// Deterministic splittable RNG built on SplitMix64.
///
/// A stream is identified by its 64-bit state. `child(i)` derives an
/// independent stream for branch i by mixing the branch index into the
/// state, so a search tree can give every branch its own reproducible
/// stream: the stream id is, in effect, the path of branch indices from
/// the root. All draws are plain integer arithmetic and therefore
/// identical across platforms and compilers.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  /// Uniform in [0, bound); bound must be positive. Unbiased via rejection.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (~bound + 1) % bound;  // (2^64 - bound) mod bound
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Independent stream for branch `index` of this node.
  RngStream child(uint64_t index) const {
    return RngStream(mix(state_ + kGolden * (index + 1)));
  }

  /// Draws `count` distinct elements from `population` (uniformly, without
  /// replacement) by a partial Fisher-Yates shuffle. Order of the sample is
  /// the draw order. If count >= |population| the whole population is
  /// returned in its original order.
  std::vector<int> sample_without_replacement(std::vector<int> population, size_t count) {
    if (count >= population.size()) return population;
    for (size_t i = 0; i < count; ++i) {
      size_t j = i + static_cast<size_t>(next_below(population.size() - i));
      std::swap(population[i], population[j]);
    }
    population.resize(count);
    return population;
  }

 private:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace hvc
