#include <complex>

#include "support.hpp"

using namespace hyperbessel;

namespace {

constexpr int D = 50;

ExpansionParams p3(const Rational& a, const Rational& b, int digits = D) { return derive_params(3, {a, b}, digits); }

ExpansionParams fifths(const Rational& last = Rational(4, 5), int digits = D) {
  return derive_params(5, {Rational(1, 5), Rational(2, 5), Rational(3, 5), last}, digits);
}

ExpansionParams quarters() { return derive_params(4, {Rational(1, 4), Rational(1, 2), Rational(3, 4)}, D); }

BigReal X(long v, int digits = D) { return BigReal(v, digits); }

// Level with prefactor -2 A0 x^theta e^(x cos(k pi/n)) and angular part
// Re[exp(i phi_j) sum_r exp(2 pi i b_r)], phi_j = x sin(k pi/n) + k pi (theta - j)/n,
// evaluated in long double complex arithmetic.
long double rotated_level(const ExpansionParams& p, const CoeffTable& t, double x, size_t M, int k,
                          const std::vector<Rational>& rotors) {
  const long double pi = std::acos(-1.0L);
  const long double ang = k * pi / p.n;
  std::complex<long double> w = 0;
  for (const auto& b : rotors) w += std::polar(1.0L, 2 * pi * static_cast<long double>(b.get_d()));
  long double sum = 0;
  for (size_t j = 0; j < M; ++j) {
    const long double phi = x * std::sin(ang) + ang * (p.theta.get_d() - static_cast<long double>(j));
    sum += t.c[j].to_double() * std::pow(static_cast<long double>(x), -static_cast<long double>(j)) *
           std::real(std::polar(1.0L, phi) * w);
  }
  return -2 * p.A0.to_double() * std::pow(static_cast<long double>(x), p.theta.get_d()) *
         std::exp(x * std::cos(ang)) * sum;
}

}  // namespace

TEST(Dominant, ThirdsSingleTerm) {
  const auto p = p3(Rational(1, 3), Rational(2, 3));
  const auto t = stirling_matching_coeffs(p, 3);
  for (long x : {3L, 10L, 25L}) {
    const BigReal expect = 2 * p.A0 * exp(X(x) / 2) * cos(sqrt(X(3)) * X(x) / 2);
    EXPECT_REL_LE(dominant_series(p, t, X(x), 1).value, expect, -45);
  }
}

TEST(Dominant, FourThirdsFiveThirds) {
  const auto p = p3(Rational(4, 3), Rational(5, 3));
  const auto t = stirling_matching_coeffs(p, 3);
  const BigReal x = X(10);
  const BigReal expect = 3 * sqrt(X(3)) / (2 * pi(D) * x * x) * 2 * exp(x / 2) * cos(sqrt(X(3)) * x / 2 - 2 * pi(D) / 3);
  EXPECT_REL_LE(dominant_series(p, t, x, 1).value, expect, -45);
}

TEST(Dominant, QuartersSingleTerm) {
  const auto p = quarters();
  const auto t = stirling_matching_coeffs(p, 3);
  const BigReal u = X(5) / sqrt(X(2));
  EXPECT_REL_LE(dominant_series(p, t, X(5), 1).value, 2 * p.A0 * exp(u) * cos(u), -45);
}

TEST(Dominant, TraceAndErrorEstimate) {
  const auto p = p3(Rational(2, 3), Rational(5, 6));
  const auto t = stirling_matching_coeffs(p, 11);
  const auto r = dominant_series(p, t, X(20), 6);
  ASSERT_EQ(r.term_trace.size(), 6u);
  EXPECT_EQ(r.terms_used, 6);
  EXPECT_EQ(r.method, EvalMethod::Asymptotic);
  EXPECT_REL_LE(r.term_trace[2], BigReal(Rational(5, 32 * 400), D), -45);
  const BigReal prefactor = 2 * p.A0 * pow(X(20), p.theta_real()) * exp(X(10));
  EXPECT_REL_LE(r.error_estimate, prefactor * abs(t.c[6]) / pow(X(20), 6L), -45);
}

TEST(Subdominant, ThirdsIsHalfTheNaiveValue) {
  const auto p = p3(Rational(1, 3), Rational(2, 3));
  const auto t = stirling_matching_coeffs(p, 3);
  for (long x : {2L, 9L, 30L}) EXPECT_REL_LE(subdominant_series(p, t, X(x), 1).value, p.A0 * exp(-X(x)), -45);
}

TEST(Subdominant, FifthsWeightIsOneHalf) {
  const auto p = fifths();
  const auto t = stirling_matching_coeffs(p, 3);
  EXPECT_REL_LE(subdominant_series(p, t, X(8), 1).value, p.A0 * exp(-X(8)), -45);
}

TEST(Subdominant, ConsecutiveTruncationsDifferByOneTerm) {
  for (const auto& [a, b] : hb_test::nondegenerate_pairs(5150, 6)) {
    const auto p = p3(a, b);
    const auto t = stirling_matching_coeffs(p, 12);
    const BigReal x = X(13);
    const BigReal prefactor = 2 * p.A0 * cos_pi(a - b, D) * pow(x, p.theta_real()) * exp(-x);
    for (size_t M = 1; M < 11; ++M) {
      const BigReal step = subdominant_series(p, t, x, M + 1).value - subdominant_series(p, t, x, M).value;
      const BigReal expect = (M % 2 == 0 ? 1 : -1) * t.c[M] / pow(x, static_cast<long>(M)) * prefactor;
      EXPECT_ABS_LE(step - expect, log10_abs(prefactor) - 40) << to_string(a) << "," << to_string(b) << " M=" << M;
    }
  }
}

TEST(Subdominant, VanishesForHalfIntegerGap) {
  const std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(3, 4), Rational(1, 4)}, {Rational(5, 2), Rational(1)}, {Rational(1, 4), Rational(7, 4)},
      {Rational(7, 6), Rational(2, 3)}, {Rational(2), Rational(1, 2)}};
  for (const auto& [a, b] : pairs) {
    const auto p = p3(a, b);
    const auto t = stirling_matching_coeffs(p, 25);
    for (long x : {5L, 10L, 20L, 40L}) {
      for (size_t M : {1u, 5u, 25u}) EXPECT_TRUE(subdominant_series(p, t, X(x), M).value.is_zero());
    }
  }
}

TEST(Subdominant, QuartersAgainstComplexForm) {
  const auto p = derive_params(4, {Rational(-1, 4), Rational(1, 2), Rational(5, 8)}, D);
  const auto t = stirling_matching_coeffs(p, 10);
  for (double x : {6.0, 11.0, 15.0}) {
    // The n = 4 subdominant level is the k = 3 rotation with e^(-x/sqrt2).
    const long double expect = rotated_level(p, t, x, 10, 3, p.b_list);
    const double got = subdominant_series(p, t, BigReal::parse(std::to_string(x), D), 10).value.to_double();
    EXPECT_NEAR(got / static_cast<double>(expect), 1.0, 1e-12) << x;
  }
}

TEST(Intermediate, FifthsSingleTerm) {
  const auto p = fifths();
  const auto t = stirling_matching_coeffs(p, 3);
  const BigReal x = X(9);
  const BigReal ang = 3 * pi(D) / 5;
  const BigReal expect = 2 * p.A0 * exp(x * cos(ang)) * cos(x * sin(ang));
  EXPECT_REL_LE(intermediate_series_n5(p, t, x, 1).value, expect, -45);
}

TEST(Intermediate, AgainstComplexForm) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = derive_params(5, hb_test::random_b_list(rng, 5, 1, 60, 20), D);
    const auto t = stirling_matching_coeffs(p, 12);
    for (double x : {12.0, 20.0, 33.0}) {
      const long double expect = rotated_level(p, t, x, 12, 3, p.b_list);
      const double got = intermediate_series_n5(p, t, BigReal::parse(std::to_string(x), D), 12).value.to_double();
      EXPECT_NEAR(got / static_cast<double>(expect), 1.0, 1e-11) << p.b_list_string() << " x=" << x;
    }
  }
}

TEST(Intermediate, RejectsOtherOrders) {
  const auto p = p3(Rational(2, 3), Rational(5, 6));
  const auto t = stirling_matching_coeffs(p, 3);
  try {
    intermediate_series_n5(p, t, X(5), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderUnsupported);
  }
  EXPECT_THROW(evaluate(AsymSeriesSpec{p, t, AsymKind::Intermediate}, X(5), 1), Error);
  EXPECT_THROW(optimal_truncation_index(t, X(5), AsymKind::Intermediate), Error);
}

// At x = 150 the optimally truncated dominant remainder (~e^(-0.37x) relative
// to the e^(0.81x) level) sits below the intermediate level (~e^(-0.31x)),
// so the residual is the intermediate series to within ten percent.
TEST(Intermediate, ResidualAtLargeArgument) {
  const auto p = derive_params(5, {Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(6, 5)}, 160);
  const BigReal x = X(150, 160);
  const auto ot = optimal_truncation(p, x, 360);
  const BigReal residual = residual_F(p, x, ot.j0, ot.coeffs);
  const auto ei = intermediate_series_n5(p, ot.coeffs, x, optimal_truncation_index(ot.coeffs, x) + 1);
  const auto es = subdominant_series(p, ot.coeffs, x, 1);
  EXPECT_LT(abs(residual - ei.value - es.value).to_double(), 0.1 * abs(ei.value).to_double())
      << residual.to_string(8) << " vs " << ei.value.to_string(8);
}

TEST(Compound, SpecialCasesCollapseToClosedForms) {
  for (auto c : {ClosedFormCase::Case_3_13_23, ClosedFormCase::Case_3_43_53, ClosedFormCase::Case_4_quarters,
                 ClosedFormCase::Case_5_fifths}) {
    const auto p = closed_form_params(c, D);
    for (long x : {3L, 10L, 20L}) {
      const auto r = compound_eval_detailed(p, X(x), FixedPolicy{1});
      const auto cf = closed_form_eval(c, X(x), D);
      EXPECT_ABS_LE(r.total.value - cf.value, log10_abs(r.dominant.max_term_magnitude) - 45) << case_name(c) << x;
      const auto opt = compound_eval(p, X(x));
      EXPECT_ABS_LE(opt.value - cf.value, log10_abs(r.dominant.max_term_magnitude) - 30) << case_name(c) << x;
    }
  }
}

TEST(Compound, ErrorEstimateIsFirstOmittedDominantTerm) {
  const auto p = p3(Rational(2, 3), Rational(5, 6));
  const auto r = compound_eval_detailed(p, X(25));
  EXPECT_EQ(r.total.error_estimate, r.dominant.error_estimate);
  EXPECT_EQ(r.total.terms_used, static_cast<int>(r.terms_dominant));
  const auto f = series_eval(p, X(25), 40);
  // The dominant series is summed to its least term; the actual error is of that size.
  const double err = log10_abs(r.total.value - f.value);
  EXPECT_NEAR(err, log10_abs(r.total.error_estimate), 2.0);
}

TEST(Compound, OptimalTableGrowsWhenNeeded) {
  const auto p = p3(Rational(3, 2), 1);
  const auto ot = optimal_truncation(p, X(30));
  EXPECT_GT(ot.coeffs.size(), 25u);
  EXPECT_GT(ot.j0, 24u);
  // j0 is the least term of the final table.
  for (size_t j = 0; j < ot.coeffs.size(); ++j) {
    EXPECT_LE(log10_abs(ot.coeffs.c[ot.j0]) - ot.j0 * log10_abs(X(30)),
              log10_abs(ot.coeffs.c[j]) - j * log10_abs(X(30)) + 1e-9);
  }
}

TEST(Truncation, ErrorsAndSmallTables) {
  const auto p = p3(Rational(2, 3), Rational(5, 6));
  const auto t = stirling_matching_coeffs(p, 6);
  try {
    optimal_truncation_index(t, X(100));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoMinimumDetected);
  }
  EXPECT_THROW(optimal_truncation_index(stirling_matching_coeffs(p, 1), X(10)), Error);
  EXPECT_THROW(optimal_truncation_index(t, X(0)), Error);
  try {
    dominant_series(p, t, X(10), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoeffShortfall);
  }
  EXPECT_THROW(dominant_series(p, t, X(10), 0), Error);
  EXPECT_THROW(subdominant_series(p, t, X(-3), 2), Error);
  EXPECT_THROW(residual_F(p, X(10), 6, t), Error);
  EXPECT_THROW(evaluate(AsymSeriesSpec{p3(1, 2), t, AsymKind::Dominant}, X(5), 1), Error);
}

TEST(Truncation, VanishingCoefficientsCountAsZero) {
  const auto t = stirling_matching_coeffs(p3(Rational(1, 3), Rational(2, 3)), 10);
  EXPECT_EQ(optimal_truncation_index(t, X(10)), 1u);
}

// Remainder scaling at fixed M = 5 over x = 20..40, seed 20240601.
TEST(Properties, RemainderScalesLikeXToMinusM) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational a = hb_test::draw_rational(rng, 3, 87, 30);
    const Rational b = hb_test::draw_rational(rng, 3, 87, 30);
    const auto p = p3(a, b);
    const auto t = stirling_matching_coeffs(p, 6);
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (long x : {20L, 25L, 30L, 35L, 40L}) {
      const BigReal xb = X(x, 80);
      const BigReal f = series_eval(p, xb, 40).value;
      const BigReal s = dominant_series(p, t, xb, 5).value;
      const BigReal scale = pow(xb, p.theta_real()) * exp(xb / 2) * pow(xb, -5L);
      const double ratio = log10_abs(f - s) - log10_abs(scale);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    EXPECT_LT(hi - lo, 1.0) << to_string(a) << "," << to_string(b);
  }
}

TEST(Properties, HumbertMatchesScaledCompound) {
  const Rational m(1, 2), nu(2, 3);
  const auto p = p3(m + 1, nu + 1);
  for (long x : {15L, 20L, 30L}) {
    const BigReal j = humbert_J(m, nu, X(x), 40).value;
    const auto c = compound_eval(p, X(x));
    const BigReal scale = pow(X(x) / 3, BigReal(m + nu, D));
    EXPECT_LE(abs(j - scale * c.value), scale * c.error_estimate) << x;
  }
}

TEST(Properties, ResidualApproachesSubdominantLevel) {
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{Rational(1, 4), Rational(4, 3)},
                                                                       {Rational(5, 4), Rational(1, 4)}}) {
    const auto p = p3(a, b, 60);
    double previous = HUGE_VAL;
    for (long x : {10L, 15L, 20L}) {
      const auto ot = optimal_truncation(p, X(x, 60));
      const BigReal f = residual_F(p, X(x, 60), ot.j0, ot.coeffs);
      const BigReal es = subdominant_series(p, ot.coeffs, X(x, 60), ot.j0 + 1).value;
      const double rel = log10_abs(f - es) - log10_abs(es);
      EXPECT_LT(rel, previous) << to_string(a) << "," << to_string(b) << " x=" << x;
      previous = rel;
    }
  }
}
