#ifndef HYPERBESSEL_BIG_REAL_HPP
#define HYPERBESSEL_BIG_REAL_HPP

// Arbitrary-precision real numbers backed by MPFR, plus exact rationals
// (GMP mpq) for function parameters.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <string>
#include <string_view>

#include "hyperbessel/errors.hpp"

namespace hyperbessel {

using Rational = mpq_class;

/// Smallest working precision accepted anywhere, in decimal digits.
inline constexpr int kMinDigits = 30;

inline mpfr_prec_t bits_for_digits(int digits) {
  // 8 guard bits keep the per-operation relative error below 10^(1-D).
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

/// A real number carried at an explicit decimal precision.
///
/// Binary operations produce a result at the larger of the two operand
/// precisions, so precision only ever grows along a computation.  There is
/// no global default precision: every constructor takes the digit count.
class BigReal {
 public:
  explicit BigReal(int digits = kMinDigits) : digits_(std::max(digits, kMinDigits)) {
    mpfr_init2(v_, bits_for_digits(digits_));
    mpfr_set_zero(v_, 1);
  }

  BigReal(long value, int digits) : BigReal(digits) { mpfr_set_si(v_, value, MPFR_RNDN); }

  BigReal(const Rational& value, int digits) : BigReal(digits) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  /// Parses a decimal literal ("1.25", "-3e-7").  Throws InvalidArgument.
  static BigReal parse(std::string_view text, int digits) {
    BigReal r(digits);
    std::string s(text);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      throw Error(ErrorKind::InvalidArgument, "not a decimal number: '" + s + "'");
    }
    return r;
  }

  BigReal(const BigReal& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }

  BigReal& operator=(const BigReal& other) {
    if (this != &other) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
      digits_ = other.digits_;
    }
    return *this;
  }

  BigReal& operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    std::swap(digits_, other.digits_);
    return *this;
  }

  ~BigReal() { mpfr_clear(v_); }

  int digits() const noexcept { return digits_; }
  mpfr_srcptr raw() const noexcept { return v_; }
  mpfr_ptr raw() noexcept { return v_; }

  /// Same value re-rounded to `digits`.
  BigReal with_digits(int digits) const {
    BigReal r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific notation with `significant` digits, e.g. "-4.43157e-06".
  std::string to_string(int significant) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t exponent = 0;
    char* raw_digits = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(std::max(significant, 1)),
                                    v_, MPFR_RNDN);
    std::string mant(raw_digits);
    mpfr_free_str(raw_digits);
    std::string out;
    if (mant.front() == '-') {
      out += '-';
      mant.erase(0, 1);
    }
    out += mant.front();
    if (mant.size() > 1) {
      out += '.';
      out.append(mant, 1, std::string::npos);
    }
    long e = static_cast<long>(exponent) - 1;
    out += (e < 0) ? "e-" : "e+";
    std::string es = std::to_string(std::labs(e));
    if (es.size() < 2) es.insert(0, "0");
    return out + es;
  }
  std::string to_string() const { return to_string(digits_); }

  BigReal operator-() const {
    BigReal r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
  BigReal& operator/=(const BigReal& o) { return *this = *this / o; }
  template <std::integral I>
  BigReal& operator*=(I o) { return *this = *this * o; }
  template <std::integral I>
  BigReal& operator/=(I o) { return *this = *this / o; }

  friend BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add); }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub); }
  friend BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul); }
  friend BigReal operator/(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_div); }

  template <std::integral I>
  friend BigReal operator+(const BigReal& a, I b) { return scalar(a, static_cast<long>(b), mpfr_add_si); }
  template <std::integral I>
  friend BigReal operator+(I a, const BigReal& b) { return b + a; }
  template <std::integral I>
  friend BigReal operator-(const BigReal& a, I b) { return scalar(a, static_cast<long>(b), mpfr_sub_si); }
  template <std::integral I>
  friend BigReal operator-(I a, const BigReal& b) {
    BigReal r(b.digits_);
    mpfr_si_sub(r.v_, static_cast<long>(a), b.v_, MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend BigReal operator*(const BigReal& a, I b) { return scalar(a, static_cast<long>(b), mpfr_mul_si); }
  template <std::integral I>
  friend BigReal operator*(I a, const BigReal& b) { return b * a; }
  template <std::integral I>
  friend BigReal operator/(const BigReal& a, I b) { return scalar(a, static_cast<long>(b), mpfr_div_si); }
  template <std::integral I>
  friend BigReal operator/(I a, const BigReal& b) {
    BigReal r(b.digits_);
    mpfr_si_div(r.v_, static_cast<long>(a), b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return b <= a; }
  template <std::integral I>
  friend bool operator==(const BigReal& a, I b) { return mpfr_cmp_si(a.v_, static_cast<long>(b)) == 0; }
  template <std::integral I>
  friend bool operator<(const BigReal& a, I b) { return mpfr_cmp_si(a.v_, static_cast<long>(b)) < 0; }
  template <std::integral I>
  friend bool operator>(const BigReal& a, I b) { return mpfr_cmp_si(a.v_, static_cast<long>(b)) > 0; }
  template <std::integral I>
  friend bool operator<=(const BigReal& a, I b) { return mpfr_cmp_si(a.v_, static_cast<long>(b)) <= 0; }
  template <std::integral I>
  friend bool operator>=(const BigReal& a, I b) { return mpfr_cmp_si(a.v_, static_cast<long>(b)) >= 0; }

 private:
  using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using ScalarOp = int (*)(mpfr_ptr, mpfr_srcptr, long, mpfr_rnd_t);

  static BigReal binary(const BigReal& a, const BigReal& b, BinaryOp op) {
    BigReal r(std::max(a.digits_, b.digits_));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static BigReal scalar(const BigReal& a, long b, ScalarOp op) {
    BigReal r(a.digits_);
    op(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }

  int digits_;
  mpfr_t v_;
};

namespace detail {
using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
inline BigReal unary(const BigReal& a, UnaryOp op) {
  BigReal r(a.digits());
  op(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline BigReal abs(const BigReal& a) { return detail::unary(a, mpfr_abs); }
inline BigReal sqrt(const BigReal& a) { return detail::unary(a, mpfr_sqrt); }
inline BigReal exp(const BigReal& a) { return detail::unary(a, mpfr_exp); }
inline BigReal log(const BigReal& a) { return detail::unary(a, mpfr_log); }
inline BigReal log10(const BigReal& a) { return detail::unary(a, mpfr_log10); }
inline BigReal cos(const BigReal& a) { return detail::unary(a, mpfr_cos); }
inline BigReal sin(const BigReal& a) { return detail::unary(a, mpfr_sin); }
inline BigReal cosh(const BigReal& a) { return detail::unary(a, mpfr_cosh); }
inline BigReal gamma(const BigReal& a) { return detail::unary(a, mpfr_gamma); }
inline BigReal cbrt(const BigReal& a) { return detail::unary(a, mpfr_cbrt); }

inline BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal r(std::max(base.digits(), exponent.digits()));
  mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return r;
}

inline BigReal pow(const BigReal& base, long exponent) {
  BigReal r(base.digits());
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

inline BigReal pi(int digits) {
  BigReal r(digits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

/// 10^k at the given precision.
inline BigReal pow10(long k, int digits) { return pow(BigReal(10, digits), k); }

inline const BigReal& max(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }

/// Approximate log10|a| as a double (for digit accounting only).
inline double log10_abs(const BigReal& a) {
  if (a.is_zero()) return -HUGE_VAL;
  return log10(abs(a)).to_double();
}

// ---------------------------------------------------------------------------
// Exact rationals

/// Parses "p/q", an integer, or a decimal literal with optional exponent
/// ("0.6667", "-1.5e-3") into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
  };
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    auto is_int = [](const std::string& t) {
      size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (i >= t.size()) return false;
      return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                         [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
    };
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return fail();
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) return fail();
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = (s[i++] == '-');
  std::string digits;
  long scale = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --scale;
      any = true;
    }
  }
  if (!any) return fail();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::string ex;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ex += s[i++];
    size_t start = ex.size();
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ex += s[i++];
    if (ex.size() == start || ex.size() > 9) return fail();
    scale += std::stol(ex);
  }
  if (i != s.size()) return fail();

  mpz_class p(digits, 10);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  Rational r = (scale >= 0) ? Rational(p * ten_pow) : Rational(p, ten_pow);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// True when q is 0, -1, -2, ...
inline bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

namespace detail {
/// q reduced into [0, 2).
inline Rational reduce_mod_two(const Rational& q) {
  mpz_class half_floor;
  mpz_class num = q.get_num(), den = q.get_den() * 2;
  mpz_fdiv_q(half_floor.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational r = q - Rational(half_floor * 2);
  r.canonicalize();
  return r;
}
}  // namespace detail

/// cos(pi q), exact (0 or +-1) at half-integers and integers.
inline BigReal cos_pi(const Rational& q, int digits) {
  Rational r = detail::reduce_mod_two(q);
  if (r == 0) return BigReal(1, digits);
  if (r == 1) return BigReal(-1, digits);
  if (r == Rational(1, 2) || r == Rational(3, 2)) return BigReal(0L, digits);
  return cos(pi(digits + 10) * BigReal(r, digits + 10)).with_digits(digits);
}

/// sin(pi q), exact (0 or +-1) at half-integers and integers.
inline BigReal sin_pi(const Rational& q, int digits) {
  Rational r = detail::reduce_mod_two(q);
  if (r == 0 || r == 1) return BigReal(0L, digits);
  if (r == Rational(1, 2)) return BigReal(1, digits);
  if (r == Rational(3, 2)) return BigReal(-1, digits);
  return sin(pi(digits + 10) * BigReal(r, digits + 10)).with_digits(digits);
}

}  // namespace hyperbessel

#endif  // HYPERBESSEL_BIG_REAL_HPP
