#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace homcat {

/// Exact rational number. mpq_class keeps values in lowest terms with a
/// positive denominator once canonicalized; every constructor path in this
/// library canonicalizes.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q". Throws input_error on malformed text.
Rat parse_rat(const std::string& text);

/// "p" or "p/q" with positive q.
std::string format_rat(const Rat& q);

/// Deterministic RNG for seeded samplers. All draws go through explicit
/// modular reduction so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  /// Uniform-ish integer in [lo, hi] (inclusive).
  long range(long lo, long hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  /// Small integer as a rational, in [-mag, mag].
  Rat small_int(long mag) { return rat(range(-mag, mag)); }

  /// Derives an independent child seed.
  std::uint64_t fork() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace homcat
