#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace detvan {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "3", "-1/2" (denominator omitted when 1).
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Seeded generator used by every randomized choice in the library.
/// Draws are taken from the raw engine output so results do not depend on
/// the standard library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// Uniform nonzero integer in [-bound, bound].
  long nonzero(long bound) {
    long v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detvan
