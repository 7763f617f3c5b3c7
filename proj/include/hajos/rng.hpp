#ifndef HAJOS_RNG_HPP
#define HAJOS_RNG_HPP

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace hajos {

/// mt19937_64 stream with self-contained bounded draws, so identical seeds
/// replay identically regardless of standard-library distribution details.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound), bound >= 1. Masked rejection keeps it
  /// unbiased; every call consumes at least one engine output.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("rng bound must be positive");
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound | 1);
    std::uint64_t draw = engine_() & mask;
    while (draw >= bound) draw = engine_() & mask;
    return draw;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hajos

#endif
