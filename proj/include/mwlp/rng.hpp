#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace mwlp {

// All randomness in this library goes through the helpers below on top of
// std::mt19937_64. The engine is bit-exact across platforms by definition;
// the standard <random> distributions are not, so we draw by hand. Seeded
// runs therefore serialize byte-identically everywhere.
using Rng = std::mt19937_64;

// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t q = std::numeric_limits<std::uint64_t>::max() / n;
  const std::uint64_t bound = q * n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < bound) return x % n;
  }
}

// Uniform integer in [lo, hi], inclusive.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Uniform real in [lo, hi). 53-bit mantissa draw.
inline double uniform_real(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

// Fisher-Yates shuffle using uniform_below; std::shuffle is not portable.
template <typename T>
void shuffle(Rng& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = uniform_below(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace mwlp
