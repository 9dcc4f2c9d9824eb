#ifndef CLASSLAB_NUMERIC_HPP
#define CLASSLAB_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

#include "classlab/error.hpp"

namespace classlab {

// Exact arithmetic is GMP-backed throughout; no floating point anywhere in the
// algebraic core.
using Integer = mpz_class;
using Rat = mpq_class;

static_assert(sizeof(long) == sizeof(long long), "64-bit long assumed for GMP conversions");

inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

inline Rat make_rat(long long num, long long den = 1) {
  Rat r{to_integer(num), to_integer(den)};
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Integer rat_numerator(const Rat& r) { return r.get_num(); }

inline std::string integer_to_string(const Integer& z) { return z.get_str(); }

// Renders "p" for integers and "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
  if (rat_is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline long long integer_to_ll(const Integer& z) {
  require(z.fits_slong_p(), errc::non_integer_result,
          "integer value does not fit a machine word: " + z.get_str());
  return z.get_si();
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline long long ipow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Deterministic xorshift-style generator for sampled invariant checks.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace classlab

#endif  // CLASSLAB_NUMERIC_HPP
