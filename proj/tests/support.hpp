#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "poncelet/classify.hpp"
#include "poncelet/rational.hpp"

namespace poncelet::testing {

/// PONCELET_SEED if set, else a fixed default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("PONCELET_SEED"); s != nullptr && *s != '\0') return std::stoull(s);
  return 20240611u;
}

/// a / b in lowest terms (mpq_class(a, b) alone does not canonicalize).
inline Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t s = seed()) : rng_(s) {}

  /// a / b with |a| <= num_max, 1 <= b <= den_max.
  Rational next(int num_max = 12, int den_max = 8) {
    std::uniform_int_distribution<int> num(-num_max, num_max), den(1, den_max);
    return q(num(rng_), den(rng_));
  }

  Rational nonzero(int num_max = 12, int den_max = 8) {
    for (;;) {
      Rational r = next(num_max, den_max);
      if (r != 0) return r;
    }
  }

  /// Centre within [-2, 2]^2, off the unit circle and the focus.
  Center center_off_sigma() {
    for (;;) {
      Center e{next(16, 8), next(16, 8)};
      if (!e.in_sigma()) return e;
    }
  }

  /// Centre strictly inside the unit disk, not the focus.
  Center center_in_disk() {
    for (;;) {
      Center e{next(20, 20), next(20, 20)};
      if (!e.at_focus() && e.norm2() < 1) return e;
    }
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace poncelet::testing
