#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hyperbessel/params.hpp"

using namespace hyperbessel;

namespace {

void expect_close(const BigReal& a, const BigReal& b, int digits) {
  BigReal scale = max(abs(b), BigReal(1, a.digits()));
  EXPECT_LE(log10_abs(a - b) - log10_abs(scale), -digits) << a.to_string(30) << " vs " << b.to_string(30);
}

}  // namespace

TEST(Params, ThirdsCase) {
  auto p = derive_params(3, {Rational(1, 3), Rational(2, 3)}, 50);
  EXPECT_EQ(p.theta, 0);
  EXPECT_EQ(p.kappa, 3);
  expect_close(p.A0, BigReal(1, 50) / (sqrt(BigReal(3, 50)) * 2 * pi(50)), 48);
}

TEST(Params, TwoThirdsFiveSixths) {
  auto p = derive_params(3, {Rational(2, 3), Rational(5, 6)}, 50);
  EXPECT_EQ(p.theta, Rational(-1, 2));
  EXPECT_EQ(p.theta_prime, Rational(3, 2));
  // 3^(-1/2 + 1/2) / (2 pi) = 1/(2 pi); oracle in long double
  EXPECT_NEAR(p.A0.to_double(), 1.0 / (2.0 * M_PI), 1e-15);
  expect_close(p.A0, BigReal(1, 50) / (2 * pi(50)), 48);
}

TEST(Params, QuartersCase) {
  auto p = derive_params(4, {Rational(1, 4), Rational(1, 2), Rational(3, 4)}, 50);
  EXPECT_EQ(p.theta, 0);
  BigReal expect = BigReal(1, 50) / (2 * pow(2 * pi(50), BigReal(Rational(3, 2), 50)));
  expect_close(p.A0, expect, 48);
}

TEST(Params, FifthsCase) {
  auto p = derive_params(5, {Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}, 50);
  EXPECT_EQ(p.theta, 0);
  expect_close(p.A0, BigReal(1, 50) / (sqrt(BigReal(5, 50)) * pow(2 * pi(50), 2L)), 48);
}

TEST(Params, Errors) {
  try {
    derive_params(3, {Rational(2, 3), Rational(-1)}, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleParameter);
  }
  try {
    derive_params(6, {1, 1, 1, 1, 1}, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderUnsupported);
  }
  try {
    derive_params(4, {Rational(1, 2), Rational(1, 3)}, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
  try {
    derive_params(3, {Rational(1, 2), Rational(1, 3)}, 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrecisionInsufficient);
  }
  EXPECT_THROW(derive_params(3, {Rational(0), Rational(1, 3)}, 50), Error);
}

// Generators below draw parameters k/q from a fixed seed so failures
// reproduce.
TEST(Params, InvariantsOnRandomSets) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-70, 90);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    std::vector<Rational> b;
    while (b.size() < static_cast<size_t>(n - 1)) {
      Rational v(num(rng), 30);
      v.canonicalize();
      if (!is_nonpositive_integer(v)) b.push_back(v);
    }
    auto p = derive_params(n, b, 40);
    EXPECT_EQ(p.kappa, n);
    EXPECT_EQ(p.theta + p.theta_prime, 1);
    Rational sigma = 0;
    for (const auto& v : b) sigma += v;
    EXPECT_EQ(p.sigma, sigma);
    if (n == 3) {
      EXPECT_EQ(p.theta, 1 - b[0] - b[1]);
    }

    // Permutation symmetry: theta and A0 depend only on sigma.
    auto shuffled = b;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto q = derive_params(n, shuffled, 40);
    EXPECT_EQ(q.theta, p.theta);
    EXPECT_EQ(q.A0, p.A0);
    EXPECT_TRUE(q.same_function(p));
  }
}

TEST(Params, NThreeMatchesSpecializedPrefactor) {
  auto p = derive_params(3, {Rational(5, 4), Rational(1, 4)}, 60);
  // 3^(-1/2 - theta) / (2 pi) with theta = -1/2
  expect_close(p.A0, BigReal(1, 60) / (2 * pi(60)), 58);
}

TEST(Params, WithDigitsRederives) {
  auto p = derive_params(3, {Rational(2, 3), Rational(5, 6)}, 40);
  auto q = p.with_digits(120);
  EXPECT_EQ(q.digits, 120);
  EXPECT_EQ(q.A0.digits(), 120);
  expect_close(q.A0, BigReal(1, 120) / (2 * pi(120)), 118);
}
