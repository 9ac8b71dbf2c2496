#ifndef HYPERBESSEL_REFERENCE_HPP
#define HYPERBESSEL_REFERENCE_HPP

// Ground-truth values of F_n(x) and the Humbert function J_{m,nu}(x) by
// direct summation of the defining series, plus the exact closed forms
// available for special parameter sets.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hyperbessel/big_real.hpp"
#include "hyperbessel/errors.hpp"
#include "hyperbessel/params.hpp"

namespace hyperbessel {

enum class EvalMethod { Series, ClosedForm, Asymptotic, Compound };

inline std::string_view method_name(EvalMethod m) {
  switch (m) {
    case EvalMethod::Series: return "series";
    case EvalMethod::ClosedForm: return "closed-form";
    case EvalMethod::Asymptotic: return "asymptotic";
    case EvalMethod::Compound: return "compound";
  }
  return "unknown";
}

struct EvalResult {
  BigReal value;
  EvalMethod method = EvalMethod::Series;
  int terms_used = 0;
  BigReal max_term_magnitude;
  BigReal error_estimate;  // absolute, >= 0
  /// Asymptotic methods only: |c_j| x^(-j) for every term summed.
  std::vector<BigReal> term_trace;

  /// log10(max_term / |value|): decimal digits lost to cancellation.
  double digits_lost() const {
    if (value.is_zero() || max_term_magnitude.is_zero()) return 0.0;
    return log10_abs(max_term_magnitude) - log10_abs(value);
  }
};

/// Working precision for the direct series when the caller does not fix
/// one: max(50, ceil(1.2 x) + target + 20) digits.  The largest summand is
/// about e^x while F is about e^(x/2), and resolving the e^(-x) component
/// beneath that costs roughly another 0.65 x digits.
inline int auto_series_digits(double x, int target_digits) {
  return std::max(50, static_cast<int>(std::ceil(1.2 * x)) + target_digits + 20);
}

/// F_n(x) by direct summation.
///
/// Summation stops at the first index K past which every term ratio is
/// below 1/2 (so the tail is bounded by 2|t_{K+1}|) and that bound is below
/// 10^(-target-10) |partial sum|.  `working_digits` = 0 selects
/// auto_series_digits.
inline EvalResult series_eval(const ExpansionParams& params, const BigReal& x, int target_digits,
                              int working_digits = 0) {
  if (x.sign() < 0) throw Error(ErrorKind::DomainError, "x must be non-negative, got " + x.to_string(10));
  if (target_digits < 1) throw Error(ErrorKind::InvalidArgument, "target digits must be positive");
  const int D = working_digits > 0 ? working_digits : auto_series_digits(x.to_double(), target_digits);
  if (D < kMinDigits) {
    throw Error(ErrorKind::PrecisionInsufficient, "working precision below " + std::to_string(kMinDigits));
  }
  const ExpansionParams p = params.with_digits(D);
  const int n = p.n;
  const BigReal xw = x.with_digits(D);
  const BigReal z = pow(xw / n, static_cast<long>(n));

  std::vector<BigReal> b;
  BigReal term(1, D);
  for (size_t j = 0; j < p.b_list.size(); ++j) {
    b.push_back(p.b(j));
    term /= gamma(b.back());
  }
  // k + b_j > 0 for all j from this index on; needed for a monotone ratio.
  double min_b = 0.0;
  for (const auto& bj : p.b_list) min_b = std::min(min_b, bj.get_d());
  const long positive_from = static_cast<long>(std::floor(-min_b)) + 1;

  const BigReal tol = pow10(-(target_digits + 10), D);
  BigReal sum(D);
  BigReal max_term = abs(term);
  BigReal tail_bound(D);
  long k = 0;
  constexpr long kMaxTerms = 1'000'000;
  for (;; ++k) {
    sum += term;
    if (abs(term) > max_term) max_term = abs(term);

    // ratio t_{k+1}/t_k = -z / ((k+1) prod (k + b_j))
    BigReal denom(k + 1, D);
    for (const auto& bj : b) denom *= bj + k;
    BigReal next = -(term * z) / denom;

    if (k + 1 >= positive_from) {
      BigReal next_denom(k + 2, D);
      for (const auto& bj : b) next_denom *= bj + (k + 1);
      bool ratio_small = 2 * z <= abs(next_denom);
      BigReal bound = 2 * abs(next);
      if (ratio_small && bound <= tol * abs(sum) && !sum.is_zero()) {
        tail_bound = bound;
        ++k;
        break;
      }
      if (ratio_small && next.is_zero()) {
        ++k;
        break;
      }
    }
    term = next;
    if (k > kMaxTerms) throw Error(ErrorKind::PrecisionInsufficient, "series did not terminate");
  }

  EvalResult r{sum, EvalMethod::Series, static_cast<int>(k), max_term, BigReal(D), {}};
  // Rounding: each of the K summands carries relative error ~10^(1-D).
  BigReal rounding = max_term * pow10(1 - D, D) * static_cast<long>(k + 1);
  r.error_estimate = tail_bound + rounding;

  if (sum.is_zero()) {
    throw Error(ErrorKind::PrecisionInsufficient, "series sum cancelled to zero at " + std::to_string(D) + " digits");
  }
  if (r.error_estimate > abs(sum) * pow10(-target_digits, D)) {
    throw Error(ErrorKind::PrecisionInsufficient,
                "target of " + std::to_string(target_digits) + " digits unreachable at " + std::to_string(D) +
                    " working digits (about " + std::to_string(static_cast<int>(r.digits_lost())) +
                    " digits lost to cancellation)");
  }
  return r;
}

enum class ClosedFormCase { Case_3_13_23, Case_3_43_53, Case_4_quarters, Case_5_fifths };

inline std::string_view case_name(ClosedFormCase c) {
  switch (c) {
    case ClosedFormCase::Case_3_13_23: return "n3-1/3-2/3";
    case ClosedFormCase::Case_3_43_53: return "n3-4/3-5/3";
    case ClosedFormCase::Case_4_quarters: return "n4-quarters";
    case ClosedFormCase::Case_5_fifths: return "n5-fifths";
  }
  return "unknown";
}

/// The parameter set whose F_n the closed form evaluates.
inline ExpansionParams closed_form_params(ClosedFormCase c, int digits) {
  switch (c) {
    case ClosedFormCase::Case_3_13_23: return derive_params(3, {Rational(1, 3), Rational(2, 3)}, digits);
    case ClosedFormCase::Case_3_43_53: return derive_params(3, {Rational(4, 3), Rational(5, 3)}, digits);
    case ClosedFormCase::Case_4_quarters:
      return derive_params(4, {Rational(1, 4), Rational(1, 2), Rational(3, 4)}, digits);
    case ClosedFormCase::Case_5_fifths:
      return derive_params(5, {Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}, digits);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown closed-form case");
}

/// Exact elementary-function values of F_n(x) for the four parameter sets
/// where the gamma products collapse by the multiplication formula.
inline EvalResult closed_form_eval(ClosedFormCase c, const BigReal& x, int digits) {
  const BigReal xw = x.with_digits(std::max(digits, x.digits()));
  const int D = xw.digits();
  const BigReal two_pi = 2 * pi(D);
  const BigReal three(3, D);
  BigReal value(D);
  switch (c) {
    case ClosedFormCase::Case_3_13_23: {
      // 3^(-1/2)/(2 pi) (2 e^(x/2) cos(sqrt3 x/2) + e^(-x))
      value = (2 * exp(xw / 2) * cos(sqrt(three) * xw / 2) + exp(-xw)) / (sqrt(three) * two_pi);
      break;
    }
    case ClosedFormCase::Case_3_43_53: {
      if (xw.sign() <= 0) throw Error(ErrorKind::DomainError, "closed form 4/3, 5/3 needs x > 0");
      // 3^(3/2)/(2 pi x^2) (2 e^(x/2) cos(sqrt3 x/2 - 2 pi/3) + e^(-x))
      BigReal phase = sqrt(three) * xw / 2 - 2 * pi(D) / 3;
      value = three * sqrt(three) / (two_pi * xw * xw) * (2 * exp(xw / 2) * cos(phase) + exp(-xw));
      break;
    }
    case ClosedFormCase::Case_4_quarters: {
      // 4 A0 cos(x/sqrt2) cosh(x/sqrt2), A0 = 4^(-1/2)/(2 pi)^(3/2)
      BigReal u = xw / sqrt(BigReal(2, D));
      BigReal A0 = BigReal(1, D) / (2 * pow(two_pi, BigReal(Rational(3, 2), D)));
      value = 4 * A0 * cos(u) * cosh(u);
      break;
    }
    case ClosedFormCase::Case_5_fifths: {
      // 5^(-1/2)/(2 pi)^2 {2 e^(x cos pi/5) cos(x sin pi/5)
      //                    + 2 e^(x cos 3pi/5) cos(x sin 3pi/5) + e^(-x)}
      BigReal p5 = pi(D) / 5;
      BigReal p35 = 3 * pi(D) / 5;
      BigReal bracket = 2 * exp(xw * cos(p5)) * cos(xw * sin(p5)) + 2 * exp(xw * cos(p35)) * cos(xw * sin(p35)) +
                        exp(-xw);
      value = bracket / (sqrt(BigReal(5, D)) * two_pi * two_pi);
      break;
    }
  }
  return EvalResult{value, EvalMethod::ClosedForm, 1, abs(value), BigReal(D), {}};
}

/// Humbert's J_{m,nu}(x) = (x/3)^(m+nu) F(x) with a = m+1, b = nu+1.
inline EvalResult humbert_J(const Rational& m, const Rational& nu, const BigReal& x, int target_digits,
                            int working_digits = 0) {
  const Rational a = m + 1, b = nu + 1;
  const Rational order = m + nu;
  const int D = working_digits > 0 ? working_digits : auto_series_digits(x.to_double(), target_digits);
  const ExpansionParams p = derive_params(3, {a, b}, D);
  if (x.sign() < 0) throw Error(ErrorKind::DomainError, "x must be non-negative");
  if (x.is_zero() && order < 0) {
    throw Error(ErrorKind::DomainError, "x = 0 with m + nu < 0 is a singular point");
  }
  EvalResult f = series_eval(p, x, target_digits, D);
  if (x.is_zero() && order > 0) {
    return EvalResult{BigReal(D), EvalMethod::Series, f.terms_used, BigReal(D), BigReal(D), {}};
  }
  BigReal scale = x.is_zero() ? BigReal(1, D) : pow(x.with_digits(D) / 3, BigReal(order, D));
  f.value *= scale;
  f.max_term_magnitude *= abs(scale);
  f.error_estimate *= abs(scale);
  return f;
}

struct IdentityCheck {
  BigReal lhs;
  BigReal rhs;
  BigReal abs_diff;
  BigReal first_omitted;  // |(-lambda x/3)^(N+1)/(N+1)! J_{N+1,N+1}(x)|
};

/// Partial sum of  sum_k (-lambda x/3)^k / k! J_{k,k}(x)  for k = 0..N
/// against J_{0,0}(x (1+lambda)^(1/3)).
inline IdentityCheck humbert_identity_check(const BigReal& x, const Rational& lambda, int N, int target_digits,
                                            int working_digits = 0) {
  if (1 + lambda < 0) throw Error(ErrorKind::DomainError, "identity needs 1 + lambda >= 0");
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be non-negative");
  const int D = working_digits > 0 ? working_digits : auto_series_digits(x.to_double(), target_digits);
  const BigReal xw = x.with_digits(D);
  const BigReal ratio = -(BigReal(lambda, D) * xw) / 3;

  auto outer_term = [&](int k) {
    BigReal weight = pow(ratio, static_cast<long>(k));
    for (int i = 2; i <= k; ++i) weight /= i;
    if (weight.is_zero()) return BigReal(D);
    return weight * humbert_J(Rational(k), Rational(k), xw, target_digits, D).value;
  };

  BigReal lhs(D);
  for (int k = 0; k <= N; ++k) lhs += outer_term(k);
  BigReal first_omitted = abs(outer_term(N + 1));

  BigReal shrink = cbrt(BigReal(Rational(1 + lambda), D));
  BigReal rhs = humbert_J(Rational(0), Rational(0), xw * shrink, target_digits, D).value;

  BigReal tol = pow10(-target_digits, D) * max(BigReal(1, D), abs(rhs));
  if (first_omitted > tol) {
    throw Error(ErrorKind::TailNotConverged, "first omitted outer term " + first_omitted.to_string(6) +
                                                 " exceeds tolerance; increase N");
  }
  return IdentityCheck{lhs, rhs, abs(lhs - rhs), first_omitted};
}

}  // namespace hyperbessel

#endif  // HYPERBESSEL_REFERENCE_HPP
