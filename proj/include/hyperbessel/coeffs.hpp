#ifndef HYPERBESSEL_COEFFS_HPP
#define HYPERBESSEL_COEFFS_HPP

// Normalised coefficients c_j = A_j / A_0 of the inverse factorial expansion
//
//   Gamma(n s + theta') / (Gamma(s+1) prod_j Gamma(s+b_j))
//       = n^(n s + 1) A_0 sum_j c_j / (n s + theta')_j
//
// computed two independent ways.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hyperbessel/bernoulli.hpp"
#include "hyperbessel/big_real.hpp"
#include "hyperbessel/errors.hpp"
#include "hyperbessel/params.hpp"
#include "hyperbessel/power_series.hpp"

namespace hyperbessel {

enum class CoeffMethod { Riney, StirlingMatching, ClosedForm };

inline std::string_view method_name(CoeffMethod m) {
  switch (m) {
    case CoeffMethod::Riney: return "riney";
    case CoeffMethod::StirlingMatching: return "stirling";
    case CoeffMethod::ClosedForm: return "closed-form";
  }
  return "unknown";
}

struct CoeffTable {
  ExpansionParams params;
  std::vector<BigReal> c;
  CoeffMethod method = CoeffMethod::StirlingMatching;
  int est_digits = 0;

  size_t size() const noexcept { return c.size(); }
  const BigReal& operator[](size_t j) const { return c.at(j); }
};

/// Extra orders carried by the Stirling-matching series beyond the number of
/// requested coefficients.
inline constexpr size_t kSeriesGuard = 8;

namespace detail {

inline double log10_rational(const Rational& q) {
  return std::log10(std::fabs(q.get_d()));
}

inline int stirling_guard_digits(const ExpansionParams& p, size_t order) {
  double largest = 1.0;
  for (const auto& b : p.b_list) largest = std::max(largest, std::fabs(b.get_d()));
  largest = std::max(largest, std::fabs(p.theta_prime.get_d()));
  double growth = 1.5 * static_cast<double>(order) * std::log10(static_cast<double>(order) + p.n + 2.0 + largest);
  return 20 + static_cast<int>(std::ceil(growth));
}

}  // namespace detail

/// Coefficients c_0..c_{M-1} by matching the Stirling series of log R(s)
/// against the inverse factorial basis 1/(n s + theta')_j, order by order in
/// 1/s.  Works for every valid parameter set.
///
/// `series_order` is the truncation order of the intermediate 1/s series and
/// must be at least M + kSeriesGuard (0 selects exactly that).
inline CoeffTable stirling_matching_coeffs(const ExpansionParams& params, size_t M, size_t series_order = 0) {
  if (M == 0) throw Error(ErrorKind::InvalidArgument, "coefficient count must be positive");
  if (series_order == 0) series_order = M + kSeriesGuard;
  if (series_order < M + kSeriesGuard) {
    throw Error(ErrorKind::SeriesLengthInsufficient,
                "series order " + std::to_string(series_order) + " < M + " + std::to_string(kSeriesGuard) + " = " +
                    std::to_string(M + kSeriesGuard));
  }

  const int n = params.n;
  const int D = params.digits;
  const size_t L = series_order;
  const int W = D + detail::stirling_guard_digits(params, L);
  const ExpansionParams wp = params.with_digits(W);

  // log R(s) where
  //   log Gamma(z + alpha) ~ (z + alpha - 1/2) log z - z + log(2 pi)/2
  //                          + sum_k (-1)^(k+1) B_{k+1}(alpha) / (k (k+1) z^k)
  // with z = n s for the numerator and z = s for each denominator factor.
  // The s log s, s, log s and constant parts cancel identically.
  Rational log_s_part = (wp.theta_prime - Rational(1, 2)) - Rational(1, 2);
  for (const auto& b : wp.b_list) log_s_part -= b - Rational(1, 2);
  log_s_part.canonicalize();

  BigReal log_n = log(BigReal(n, W));
  BigReal log_two_pi = log(2 * pi(W));
  BigReal constant_part = BigReal(wp.theta_prime - Rational(3, 2), W) * log_n -
                          BigReal(Rational(n - 1, 2), W) * log_two_pi - log(wp.A0);
  if (log_s_part != 0 || log10_abs(constant_part) > -(D - 10)) {
    throw Error(ErrorKind::CancellationFailure,
                "log s coefficient " + to_string(log_s_part) + ", constant " + constant_part.to_string(12));
  }

  const auto bern = bernoulli_numbers(L + 2);
  PowerSeries1OverS log_ratio(L, W);
  Rational n_pow = 1;
  for (size_t k = 1; k <= L; ++k) {
    n_pow *= n;
    Rational term = bernoulli_polynomial(k + 1, wp.theta_prime, bern) / n_pow;
    term -= bernoulli_polynomial(k + 1, Rational(1), bern);
    for (const auto& b : wp.b_list) term -= bernoulli_polynomial(k + 1, b, bern);
    term /= Rational(static_cast<long>(k * (k + 1)));
    if (k % 2 == 0) term = -term;
    log_ratio[k] = BigReal(term, W);
  }
  const PowerSeries1OverS ratio = log_ratio.exp();

  // 1/(n s + theta')_j = n^(-j) s^(-j) prod_{i<j} 1/(1 + (theta' + i)/(n s))
  std::vector<PowerSeries1OverS> basis;
  basis.reserve(M);
  PowerSeries1OverS factor(L, W);
  factor[0] = BigReal(1, W);
  const BigReal inv_n = BigReal(1, W) / n;
  for (size_t j = 0; j < M; ++j) {
    basis.push_back(factor);
    BigReal beta = BigReal(wp.theta_prime + Rational(static_cast<long>(j)), W) / n;
    factor = (factor * PowerSeries1OverS::geometric(beta, L, W)).shifted(1) * inv_n;
  }

  std::vector<BigReal> c;
  c.reserve(M);
  for (size_t k = 0; k < M; ++k) {
    BigReal acc = ratio[k];
    for (size_t j = 0; j < k; ++j) acc -= c[j] * basis[j][k];
    c.push_back(acc / basis[k][k]);
  }

  CoeffTable table{params, {}, CoeffMethod::StirlingMatching, D - 10};
  table.c.reserve(M);
  for (const auto& v : c) table.c.push_back(v.with_digits(D));
  return table;
}

/// Riney's recurrence for n = 3:
///   c_j = -1/(27 j) sum_{k<j} c_k e(j,k),
///   e(j,k) = sum_r D_r (theta' - 3 b_r)_{3+j} / (theta' - 3 b_r)_k
/// with (b_1, b_2, b_3) = (a, b, 1).  The weights D_r are singular at a = b,
/// a = 1 and b = 1; those inputs are rejected.
inline CoeffTable riney_coeffs(const ExpansionParams& params, size_t M) {
  if (params.n != 3) {
    throw Error(ErrorKind::OrderUnsupported, "Riney recurrence is only available for n = 3");
  }
  if (M == 0) throw Error(ErrorKind::InvalidArgument, "coefficient count must be positive");
  const Rational& a = params.b_list[0];
  const Rational& b = params.b_list[1];
  const int D = params.digits;

  Rational gap = rational_abs(a - b);
  gap = std::min(gap, rational_abs(1 - a));
  gap = std::min(gap, rational_abs(1 - b));
  if (gap == 0 || detail::log10_rational(gap) < -0.5 * D) {
    throw Error(ErrorKind::SingularRineyWeights,
                "weights D_r are singular for a=" + to_string(a) + ", b=" + to_string(b) +
                    " (a=b or a=1 or b=1); use the Stirling-matching engine");
  }

  double log_fact = std::lgamma(static_cast<double>(M) + 4.0) / std::log(10.0);
  const int W = D + 20 + static_cast<int>(std::ceil(log_fact - 2.0 * detail::log10_rational(gap)));

  const std::array<Rational, 3> shifts = {params.theta_prime - 3 * a, params.theta_prime - 3 * b,
                                          params.theta_prime - 3};
  std::array<Rational, 3> weights = {Rational(-1) / ((a - b) * (1 - a)), Rational(1) / ((a - b) * (1 - b)),
                                     Rational(1) / ((1 - a) * (1 - b))};
  std::array<BigReal, 3> shift_w{BigReal(shifts[0], W), BigReal(shifts[1], W), BigReal(shifts[2], W)};
  std::array<BigReal, 3> weight_w{BigReal(weights[0], W), BigReal(weights[1], W), BigReal(weights[2], W)};

  std::vector<BigReal> c;
  c.reserve(M);
  c.emplace_back(1, W);
  for (size_t j = 1; j < M; ++j) {
    // (x)_{3+j} / (x)_k = prod_{i=k}^{j+2} (x + i); built downward from k = j.
    std::array<BigReal, 3> prod;
    for (size_t r = 0; r < 3; ++r) {
      const long jl = static_cast<long>(j);
      prod[r] = (shift_w[r] + jl) * (shift_w[r] + (jl + 1)) * (shift_w[r] + (jl + 2));
    }
    BigReal acc(W);
    for (size_t k = j; k-- > 0;) {
      BigReal e(W);
      for (size_t r = 0; r < 3; ++r) {
        prod[r] *= shift_w[r] + static_cast<long>(k);
        e += weight_w[r] * prod[r];
      }
      acc += c[k] * e;
    }
    c.push_back(-acc / static_cast<long>(27 * j));
  }

  CoeffTable table{params, {}, CoeffMethod::Riney, D - 10};
  table.c.reserve(M);
  for (const auto& v : c) table.c.push_back(v.with_digits(D));
  return table;
}

/// c_1, c_2, c_3 for n = 3 as explicit polynomials in a, b (with
/// p_k = a^k + b^k), evaluated exactly.
inline std::array<Rational, 3> closed_form_c123(const Rational& a, const Rational& b) {
  auto p = [&](int k) {
    Rational ak = 1, bk = 1;
    for (int i = 0; i < k; ++i) {
      ak *= a;
      bk *= b;
    }
    return Rational(ak + bk);
  };
  const Rational ab = a * b;
  const Rational ab2 = ab * ab;

  Rational c1 = Rational(-2, 3) + p(1) - p(2) + ab;
  Rational c2 = Rational(2, 9) +
                Rational(1, 6) * (-4 * p(1) + p(2) - 4 * p(3) + 3 * p(4) - 3 * ab * (p(1) + 2 * p(2)) +
                                  ab * (17 + 9 * ab));
  Rational c3 = Rational(32, 81) +
                Rational(1, 162) * (-72 * p(1) - 198 * p(2) + 45 * p(3) + 81 * p(4) + 27 * p(5) - 27 * p(6) +
                                    3 * ab * (120 + 135 * ab + 63 * ab2) + 27 * ab2 * (p(1) - 6 * p(2)) +
                                    9 * ab * (24 * p(1) - 63 * p(2) + 6 * p(3) + 9 * p(4)));
  c1.canonicalize();
  c2.canonicalize();
  c3.canonicalize();
  return {c1, c2, c3};
}

/// c_1 = (n/2) { sum b_j (1 - b_j) - theta (1 - theta)/n - (n^2 - 1)/(6n) }, exact.
inline Rational general_c1_exact(const ExpansionParams& params) {
  const Rational n = params.n;
  Rational sum = 0;
  for (const auto& b : params.b_list) sum += b * (1 - b);
  Rational c1 = n / 2 * (sum - params.theta * (1 - params.theta) / n - (n * n - 1) / (6 * n));
  c1.canonicalize();
  return c1;
}

inline BigReal general_c1(const ExpansionParams& params) {
  return BigReal(general_c1_exact(params), params.digits);
}

/// c_0..c_3 from the explicit polynomials (n = 3 only).
inline CoeffTable closed_form_coeffs(const ExpansionParams& params) {
  if (params.n != 3) {
    throw Error(ErrorKind::OrderUnsupported, "explicit c_1..c_3 are only available for n = 3");
  }
  auto c123 = closed_form_c123(params.b_list[0], params.b_list[1]);
  CoeffTable table{params, {}, CoeffMethod::ClosedForm, params.digits};
  table.c.emplace_back(1, params.digits);
  for (const auto& v : c123) table.c.emplace_back(v, params.digits);
  return table;
}

}  // namespace hyperbessel

#endif  // HYPERBESSEL_COEFFS_HPP
