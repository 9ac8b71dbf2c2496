#include <gtest/gtest.h>

#include <random>

#include "hyperbessel/power_series.hpp"

using namespace hyperbessel;

namespace {

PowerSeries1OverS random_series(std::mt19937_64& rng, size_t order, int digits, bool positive_lead) {
  std::uniform_int_distribution<long> num(-40, 40);
  PowerSeries1OverS s(order, digits);
  for (size_t k = 0; k <= order; ++k) s[k] = BigReal(Rational(num(rng), 7), digits);
  if (positive_lead) s[0] = BigReal(Rational(1 + std::labs(num(rng)), 5), digits);
  return s;
}

void expect_series_close(const PowerSeries1OverS& a, const PowerSeries1OverS& b, int digits) {
  ASSERT_EQ(a.order(), b.order());
  for (size_t k = 0; k <= a.order(); ++k) {
    BigReal scale = max(abs(b[k]), BigReal(1, a.digits()));
    EXPECT_LE(log10_abs(a[k] - b[k]) - log10_abs(scale), -digits) << "k=" << k;
  }
}

}  // namespace

TEST(PowerSeries, GeometricInvertsOnePlusBetaOverS) {
  const int D = 50;
  BigReal beta(Rational(5, 3), D);
  auto g = PowerSeries1OverS::geometric(beta, 12, D);
  PowerSeries1OverS lin(12, D);
  lin[0] = BigReal(1, D);
  lin[1] = beta;
  auto prod = g * lin;
  EXPECT_EQ(prod[0], BigReal(1, D));
  for (size_t k = 1; k <= 12; ++k) EXPECT_LE(log10_abs(prod[k]), -45) << k;
}

TEST(PowerSeries, ExpOfZeroIsOne) {
  PowerSeries1OverS z(6, 40);
  auto e = z.exp();
  EXPECT_EQ(e[0], BigReal(1, 40));
  for (size_t k = 1; k <= 6; ++k) EXPECT_TRUE(e[k].is_zero());
}

TEST(PowerSeries, ExpOfOneOverSMatchesFactorials) {
  const int D = 40;
  PowerSeries1OverS f(10, D);
  f[1] = BigReal(1, D);
  auto e = f.exp();
  BigReal fact(1, D);
  for (size_t k = 0; k <= 10; ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    EXPECT_LE(log10_abs(e[k] - BigReal(1, D) / fact), -38) << k;
  }
}

TEST(PowerSeries, LogInvertsExpOnRandomSeries) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_series(rng, 15, 60, false);
    expect_series_close(f.exp().log(), f, 50);
  }
}

TEST(PowerSeries, ExpInvertsLogOnRandomSeries) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_series(rng, 15, 60, true);
    expect_series_close(f.log().exp(), f, 45);
  }
}

TEST(PowerSeries, ExpTurnsSumsIntoProducts) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 12, 60, false);
    auto g = random_series(rng, 12, 60, false);
    expect_series_close((f + g).exp(), f.exp() * g.exp(), 45);
  }
}

TEST(PowerSeries, ShiftAndTruncation) {
  PowerSeries1OverS a(4, 40), b(6, 40);
  for (size_t k = 0; k <= 4; ++k) a[k] = BigReal(static_cast<long>(k + 1), 40);
  for (size_t k = 0; k <= 6; ++k) b[k] = BigReal(1, 40);
  EXPECT_EQ((a * b).order(), 4u);
  auto s = a.shifted(2);
  EXPECT_TRUE(s[0].is_zero());
  EXPECT_TRUE(s[1].is_zero());
  EXPECT_EQ(s[2], BigReal(1, 40));
  EXPECT_EQ(s[4], BigReal(3, 40));
  EXPECT_EQ(s.order(), 4u);
  EXPECT_EQ((a - a)[3], BigReal(0, 40));
}

TEST(PowerSeries, LogRejectsNonPositiveLead) {
  PowerSeries1OverS f(3, 40);
  f[0] = BigReal(-1, 40);
  EXPECT_THROW(f.log(), Error);
}
