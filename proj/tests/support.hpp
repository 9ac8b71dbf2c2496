#ifndef HYPERBESSEL_TESTS_SUPPORT_HPP
#define HYPERBESSEL_TESTS_SUPPORT_HPP

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hyperbessel/hyperbessel.hpp"

namespace hb_test {

using hyperbessel::BigReal;
using hyperbessel::Rational;

// Uniform k/den with k in [lo, hi].
inline Rational draw_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Rational q(dist(rng), den);
  q.canonicalize();
  return q;
}

// Pairs (a, b) in [0.1, 2.9]^2 with |a-b|, |a-1|, |b-1| > 0.05, on a 1/100 grid.
inline std::vector<std::pair<Rational, Rational>> nondegenerate_pairs(std::uint64_t seed, size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Rational, Rational>> out;
  const Rational gap(1, 20);
  while (out.size() < count) {
    Rational a = draw_rational(rng, 10, 290, 100);
    Rational b = draw_rational(rng, 10, 290, 100);
    if (abs(a - b) <= gap || abs(a - 1) <= gap || abs(b - 1) <= gap) continue;
    out.emplace_back(a, b);
  }
  return out;
}

// n-1 parameters k/den avoiding the poles.
inline std::vector<Rational> random_b_list(std::mt19937_64& rng, int n, long lo, long hi, long den) {
  std::vector<Rational> b;
  while (b.size() < static_cast<size_t>(n - 1)) {
    Rational v = draw_rational(rng, lo, hi, den);
    if (!hyperbessel::is_nonpositive_integer(v)) b.push_back(v);
  }
  return b;
}

inline double rel_diff(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) return a.is_zero() ? -HUGE_VAL : hyperbessel::log10_abs(a);
  return hyperbessel::log10_abs(a - b) - hyperbessel::log10_abs(b);
}

// Asserts |a - b| / |b| <= 10^exponent.
#define EXPECT_REL_LE(a, b, exponent) \
  EXPECT_LE(::hb_test::rel_diff((a), (b)), (exponent)) << (a).to_string(25) << " vs " << (b).to_string(25)

#define EXPECT_ABS_LE(a, exponent) EXPECT_LE(::hyperbessel::log10_abs(a), (exponent)) << (a).to_string(25)

}  // namespace hb_test

#endif  // HYPERBESSEL_TESTS_SUPPORT_HPP
