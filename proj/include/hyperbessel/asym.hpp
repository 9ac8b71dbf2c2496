#ifndef HYPERBESSEL_ASYM_HPP
#define HYPERBESSEL_ASYM_HPP

// Compound asymptotic expansion of F_n(x) as x -> +inf: an exponentially
// large oscillatory series, (for n = 5) an intermediate decaying level, and
// an exponentially small series.  The real recombined forms are hard-coded
// per order.

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperbessel/big_real.hpp"
#include "hyperbessel/coeffs.hpp"
#include "hyperbessel/errors.hpp"
#include "hyperbessel/params.hpp"
#include "hyperbessel/reference.hpp"

namespace hyperbessel {

enum class AsymKind { Dominant, Intermediate, Subdominant };

inline std::string_view kind_name(AsymKind k) {
  switch (k) {
    case AsymKind::Dominant: return "dominant";
    case AsymKind::Intermediate: return "intermediate";
    case AsymKind::Subdominant: return "subdominant";
  }
  return "unknown";
}

struct AsymSeriesSpec {
  ExpansionParams params;
  CoeffTable coeffs;
  AsymKind kind = AsymKind::Dominant;

  void validate() const {
    if (kind == AsymKind::Intermediate && params.n != 5) {
      throw Error(ErrorKind::InvalidArgument, "the intermediate level exists only for n = 5");
    }
    if (!coeffs.params.same_function(params)) {
      throw Error(ErrorKind::InvalidArgument, "coefficient table was built for different parameters");
    }
  }
};

namespace detail {

inline void check_asym_inputs(const CoeffTable& coeffs, const BigReal& x, size_t M) {
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "asymptotic series need x > 0");
  if (M == 0) throw Error(ErrorKind::InvalidArgument, "M must be at least 1");
  if (M > coeffs.size()) {
    throw Error(ErrorKind::CoeffShortfall,
                "M = " + std::to_string(M) + " but only " + std::to_string(coeffs.size()) + " coefficients");
  }
}

// Shared assembly: prefactor * sum_{j<M} c_j x^(-j) g(j), with g the
// per-term angular factor.  Fills the trace with |c_j| x^(-j).
template <typename Angular>
EvalResult assemble(const CoeffTable& coeffs, const BigReal& x, size_t M, const BigReal& prefactor, Angular g) {
  const int D = prefactor.digits();
  const BigReal xw = x.with_digits(D);
  const BigReal inv_x = BigReal(1, D) / xw;
  EvalResult r{BigReal(D), EvalMethod::Asymptotic, static_cast<int>(M), BigReal(D), BigReal(D), {}};
  BigReal x_pow(1, D);
  BigReal sum(D);
  BigReal largest(D);
  for (size_t j = 0; j < M; ++j) {
    BigReal mag = abs(coeffs.c[j].with_digits(D)) * x_pow;
    r.term_trace.push_back(mag);
    if (mag > largest) largest = mag;
    sum += coeffs.c[j].with_digits(D) * x_pow * g(j);
    x_pow *= inv_x;
  }
  r.value = prefactor * sum;
  r.max_term_magnitude = abs(prefactor) * largest;
  // First omitted term when available, else the last one kept.
  BigReal tail = M < coeffs.size() ? abs(coeffs.c[M].with_digits(D)) * x_pow : r.term_trace.back();
  r.error_estimate = abs(prefactor) * tail;
  return r;
}

inline int asym_digits(const ExpansionParams& params, const CoeffTable& coeffs, const BigReal& x) {
  return std::max({params.digits, coeffs.params.digits, x.digits()});
}

}  // namespace detail

/// 2 A0 x^theta e^(x cos(pi/n)) sum_{j<M} c_j x^(-j) cos(x sin(pi/n) + pi (theta - j)/n)
inline EvalResult dominant_series(const ExpansionParams& params, const CoeffTable& coeffs, const BigReal& x,
                                  size_t M) {
  detail::check_asym_inputs(coeffs, x, M);
  const int D = detail::asym_digits(params, coeffs, x);
  const ExpansionParams p = params.with_digits(D);
  const BigReal xw = x.with_digits(D);
  const BigReal angle = pi(D) / p.n;
  const BigReal prefactor = 2 * p.A0 * pow(xw, p.theta_real()) * exp(xw * cos(angle));
  const BigReal base = xw * sin(angle);
  return detail::assemble(coeffs, xw, M, prefactor, [&](size_t j) {
    return cos(base + BigReal(p.theta - Rational(static_cast<long>(j)), D) * angle);
  });
}

/// The exponentially small series.
///   n = 3: 2 A0 cos pi(a-b) x^theta e^(-x) sum (-1)^j c_j x^(-j)
///   n = 4: -2 A0 x^theta e^(-x/sqrt2) sum c_j x^(-j) {cos phi C - sin phi S},
///          phi = x/sqrt2 + 3 pi (theta - j)/4, C, S = sum cos, sin 2 pi b_r
///   n = 5: 2 A0 [sum_{r<=3} cos pi(theta + 2 b_r + 2 b_4)] x^theta e^(-x) sum (-1)^j c_j x^(-j)
inline EvalResult subdominant_series(const ExpansionParams& params, const CoeffTable& coeffs, const BigReal& x,
                                     size_t M) {
  detail::check_asym_inputs(coeffs, x, M);
  const int D = detail::asym_digits(params, coeffs, x);
  const ExpansionParams p = params.with_digits(D);
  const BigReal xw = x.with_digits(D);
  const BigReal x_theta = pow(xw, p.theta_real());
  auto alternating = [&](size_t j) { return BigReal(j % 2 == 0 ? 1 : -1, D); };

  switch (p.n) {
    case 3: {
      BigReal prefactor = 2 * p.A0 * cos_pi(p.b_list[0] - p.b_list[1], D) * x_theta * exp(-xw);
      return detail::assemble(coeffs, xw, M, prefactor, alternating);
    }
    case 4: {
      BigReal C(D), S(D);
      for (const auto& b : p.b_list) {
        C += cos_pi(2 * b, D);
        S += sin_pi(2 * b, D);
      }
      const BigReal root2 = sqrt(BigReal(2, D));
      const BigReal base = xw / root2;
      const BigReal step = 3 * pi(D) / 4;
      BigReal prefactor = -2 * p.A0 * x_theta * exp(-base);
      return detail::assemble(coeffs, xw, M, prefactor, [&](size_t j) {
        BigReal phi = base + BigReal(p.theta - Rational(static_cast<long>(j)), D) * step;
        return cos(phi) * C - sin(phi) * S;
      });
    }
    case 5: {
      BigReal weight(D);
      for (size_t r = 0; r < 3; ++r) weight += cos_pi(p.theta + 2 * p.b_list[r] + 2 * p.b_list[3], D);
      BigReal prefactor = 2 * p.A0 * weight * x_theta * exp(-xw);
      return detail::assemble(coeffs, xw, M, prefactor, alternating);
    }
  }
  throw Error(ErrorKind::OrderUnsupported, "no subdominant series for n = " + std::to_string(p.n));
}

/// n = 5 only:
///   -2 A0 x^theta e^(x cos 3pi/5) sum c_j x^(-j) {cos phi C - sin phi S},
///   phi = x sin 3pi/5 + 3 pi (theta - j)/5, C, S summed over all four b_r.
inline EvalResult intermediate_series_n5(const ExpansionParams& params, const CoeffTable& coeffs, const BigReal& x,
                                         size_t M) {
  if (params.n != 5) throw Error(ErrorKind::OrderUnsupported, "intermediate series exists only for n = 5");
  detail::check_asym_inputs(coeffs, x, M);
  const int D = detail::asym_digits(params, coeffs, x);
  const ExpansionParams p = params.with_digits(D);
  const BigReal xw = x.with_digits(D);
  BigReal C(D), S(D);
  for (const auto& b : p.b_list) {
    C += cos_pi(2 * b, D);
    S += sin_pi(2 * b, D);
  }
  const BigReal angle = 3 * pi(D) / 5;
  const BigReal base = xw * sin(angle);
  BigReal prefactor = -2 * p.A0 * pow(xw, p.theta_real()) * exp(xw * cos(angle));
  return detail::assemble(coeffs, xw, M, prefactor, [&](size_t j) {
    BigReal phi = base + BigReal(p.theta - Rational(static_cast<long>(j)), D) * angle;
    return cos(phi) * C - sin(phi) * S;
  });
}

inline EvalResult evaluate(const AsymSeriesSpec& spec, const BigReal& x, size_t M) {
  spec.validate();
  switch (spec.kind) {
    case AsymKind::Dominant: return dominant_series(spec.params, spec.coeffs, x, M);
    case AsymKind::Intermediate: return intermediate_series_n5(spec.params, spec.coeffs, x, M);
    case AsymKind::Subdominant: return subdominant_series(spec.params, spec.coeffs, x, M);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown series kind");
}

/// Index j0 of the least |c_j| x^(-j) over the whole table (ties go to the
/// earliest index).  Every series level shares these magnitudes, so `kind`
/// only matters for validation.  Coefficients below the table's accuracy
/// count as zero, which keeps the vanishing cases well defined.
///
/// Throws NoMinimumDetected when the smallest term is the last one and the
/// terms are still decreasing there.
inline size_t optimal_truncation_index(const CoeffTable& coeffs, const BigReal& x,
                                       AsymKind kind = AsymKind::Dominant) {
  if (kind == AsymKind::Intermediate && coeffs.params.n != 5) {
    throw Error(ErrorKind::InvalidArgument, "the intermediate level exists only for n = 5");
  }
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "optimal truncation needs x > 0");
  if (coeffs.size() < 2) throw Error(ErrorKind::NoMinimumDetected, "need at least two coefficients");

  // Work with log10 magnitudes; -inf marks a coefficient that is zero to
  // the table's accuracy.
  const double log_x = log10_abs(x);
  const double zero_level = -static_cast<double>(std::max(coeffs.est_digits, 1));
  std::vector<double> lg(coeffs.size());
  for (size_t j = 0; j < coeffs.size(); ++j) {
    double lc = coeffs.c[j].is_zero() ? -INFINITY : log10_abs(coeffs.c[j]);
    lg[j] = lc < zero_level ? -INFINITY : lc - static_cast<double>(j) * log_x;
  }
  size_t best = 0;
  for (size_t j = 1; j < lg.size(); ++j) {
    if (lg[j] < lg[best]) best = j;
  }
  const size_t last = lg.size() - 1;
  if (best == last && lg[last] < lg[last - 1]) {
    throw Error(ErrorKind::NoMinimumDetected, "terms still decreasing at j = " + std::to_string(last) +
                                                  " for x = " + x.to_string(8) + "; supply more coefficients");
  }
  return best;
}

inline constexpr size_t kDefaultCoeffCount = 25;
inline constexpr size_t kMaxCoeffCount = 400;

struct OptimalTruncation {
  CoeffTable coeffs;
  size_t j0 = 0;
};

/// Builds a table of `initial_count` coefficients and locates the least
/// term; while the terms are still decreasing at the end of the table the
/// table is doubled, up to kMaxCoeffCount.
inline OptimalTruncation optimal_truncation(const ExpansionParams& params, const BigReal& x,
                                            size_t initial_count = kDefaultCoeffCount,
                                            AsymKind kind = AsymKind::Dominant) {
  size_t count = std::max<size_t>(initial_count, 2);
  for (;;) {
    CoeffTable coeffs = stirling_matching_coeffs(params, count);
    try {
      size_t j0 = optimal_truncation_index(coeffs, x, kind);
      return OptimalTruncation{std::move(coeffs), j0};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoMinimumDetected || count >= kMaxCoeffCount) throw;
    }
    count = std::min(2 * count, kMaxCoeffCount);
  }
}

struct OptimalPolicy {
  size_t coeff_count = kDefaultCoeffCount;
};
struct FixedPolicy {
  size_t M = 1;  // number of terms kept in every series
};
using TruncationPolicy = std::variant<OptimalPolicy, FixedPolicy>;

struct CompoundResult {
  EvalResult total;
  EvalResult dominant;
  std::optional<EvalResult> intermediate;
  EvalResult subdominant;
  size_t terms_dominant = 0;
};

/// Sum of all exponential levels.  Under OptimalPolicy every series keeps
/// c_0..c_{j0} with j0 its own least-term index (see optimal_truncation);
/// error_estimate is the first omitted dominant term.
inline CompoundResult compound_eval_detailed(const ExpansionParams& params, const BigReal& x,
                                             const TruncationPolicy& policy = OptimalPolicy{}) {
  CoeffTable coeffs;
  if (const auto* opt = std::get_if<OptimalPolicy>(&policy)) {
    coeffs = optimal_truncation(params, x, opt->coeff_count).coeffs;
  } else {
    coeffs = stirling_matching_coeffs(params, std::get<FixedPolicy>(policy).M + 1);
  }

  auto terms_for = [&](AsymKind kind) -> size_t {
    if (const auto* fixed = std::get_if<FixedPolicy>(&policy)) return fixed->M;
    return optimal_truncation_index(coeffs, x, kind) + 1;
  };

  const size_t md = terms_for(AsymKind::Dominant);
  EvalResult dom = dominant_series(params, coeffs, x, md);
  EvalResult sub = subdominant_series(params, coeffs, x, terms_for(AsymKind::Subdominant));
  std::optional<EvalResult> mid;
  BigReal total = dom.value + sub.value;
  if (params.n == 5) {
    mid = intermediate_series_n5(params, coeffs, x, terms_for(AsymKind::Intermediate));
    total += mid->value;
  }

  EvalResult r{total, EvalMethod::Compound, static_cast<int>(md), dom.max_term_magnitude, dom.error_estimate,
               dom.term_trace};
  return CompoundResult{r, std::move(dom), std::move(mid), std::move(sub), md};
}

inline EvalResult compound_eval(const ExpansionParams& params, const BigReal& x,
                                const TruncationPolicy& policy = OptimalPolicy{}) {
  return compound_eval_detailed(params, x, policy).total;
}

/// Series target (decimal digits, relative to |F|) that resolves the e^(-x)
/// level beneath the e^(x cos(pi/n)) level with ten digits to spare.
inline int residual_series_target(int n, double x) {
  const double pi = std::acos(-1.0);
  return static_cast<int>(std::ceil((std::cos(pi / n) + 1.0) * x * std::log10(std::exp(1.0)))) + 20;
}

/// F(x) minus the dominant series summed through j = j0 inclusive.
inline BigReal residual_F(const ExpansionParams& params, const BigReal& x, size_t j0, const CoeffTable& coeffs) {
  if (j0 + 1 > coeffs.size()) {
    throw Error(ErrorKind::CoeffShortfall,
                "j0 = " + std::to_string(j0) + " needs " + std::to_string(j0 + 1) + " coefficients");
  }
  const double xd = x.to_double();
  const int target = residual_series_target(params.n, xd);
  const int W = std::max(auto_series_digits(xd, target), params.digits);
  const EvalResult f = series_eval(params, x, target, W);
  const BigReal xw = x.with_digits(W);
  const EvalResult dom = dominant_series(params.with_digits(W), coeffs, xw, j0 + 1);
  BigReal residual = f.value - dom.value;

  // The coefficients limit how far below the dominant level the residual
  // can be trusted.
  if (!residual.is_zero()) {
    double resolved = log10_abs(dom.max_term_magnitude) - log10_abs(residual);
    if (resolved > coeffs.est_digits - 6) {
      throw Error(ErrorKind::PrecisionInsufficient,
                  "residual lies " + std::to_string(static_cast<int>(resolved)) +
                      " digits below the dominant level; coefficients carry only " +
                      std::to_string(coeffs.est_digits));
    }
  }
  return residual.with_digits(params.digits);
}

}  // namespace hyperbessel

#endif  // HYPERBESSEL_ASYM_HPP
