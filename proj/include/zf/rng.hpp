#pragma once

#include <cstdint>
#include <random>

#include "zf/rational.hpp"

namespace zf {

/// Deterministic seeded generator for "generally chosen" data: identical
/// seeds reproduce identical draws on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small-height rational: numerator in [-h, h], denominator in [1, 2].
  Rational small_rational(long h = 3) {
    Rational r(int_in(-h, h), int_in(1, 2));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace zf
