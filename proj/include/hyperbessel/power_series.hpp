#ifndef HYPERBESSEL_POWER_SERIES_HPP
#define HYPERBESSEL_POWER_SERIES_HPP

#include <cstddef>
#include <vector>

#include "hyperbessel/big_real.hpp"
#include "hyperbessel/errors.hpp"

namespace hyperbessel {

/// Truncated expansion r_0 + r_1/s + ... + r_L/s^L.
///
/// All operations are exact through order s^(-L) given exact inputs; terms
/// beyond the truncation order are dropped, never estimated.
class PowerSeries1OverS {
 public:
  PowerSeries1OverS(size_t order, int digits) : coeff_(order + 1, BigReal(digits)), digits_(digits) {}

  explicit PowerSeries1OverS(std::vector<BigReal> coefficients)
      : coeff_(std::move(coefficients)), digits_(coeff_.empty() ? kMinDigits : coeff_.front().digits()) {
    if (coeff_.empty()) throw Error(ErrorKind::InvalidArgument, "empty power series");
  }

  /// 1 / (1 + beta/s) = sum_k (-beta)^k s^(-k).
  static PowerSeries1OverS geometric(const BigReal& beta, size_t order, int digits) {
    PowerSeries1OverS g(order, digits);
    BigReal term(1, digits);
    for (size_t k = 0; k <= order; ++k) {
      g.coeff_[k] = term;
      term = -(term * beta);
    }
    return g;
  }

  size_t order() const noexcept { return coeff_.size() - 1; }
  int digits() const noexcept { return digits_; }

  const BigReal& operator[](size_t k) const { return coeff_.at(k); }
  BigReal& operator[](size_t k) { return coeff_.at(k); }
  const std::vector<BigReal>& coefficients() const noexcept { return coeff_; }

  friend PowerSeries1OverS operator+(const PowerSeries1OverS& a, const PowerSeries1OverS& b) {
    PowerSeries1OverS r(common_order(a, b), std::max(a.digits_, b.digits_));
    for (size_t k = 0; k <= r.order(); ++k) r.coeff_[k] = a.coeff_[k] + b.coeff_[k];
    return r;
  }

  friend PowerSeries1OverS operator-(const PowerSeries1OverS& a, const PowerSeries1OverS& b) {
    PowerSeries1OverS r(common_order(a, b), std::max(a.digits_, b.digits_));
    for (size_t k = 0; k <= r.order(); ++k) r.coeff_[k] = a.coeff_[k] - b.coeff_[k];
    return r;
  }

  friend PowerSeries1OverS operator*(const PowerSeries1OverS& a, const PowerSeries1OverS& b) {
    PowerSeries1OverS r(common_order(a, b), std::max(a.digits_, b.digits_));
    for (size_t k = 0; k <= r.order(); ++k) {
      BigReal acc(r.digits_);
      for (size_t i = 0; i <= k; ++i) acc += a.coeff_[i] * b.coeff_[k - i];
      r.coeff_[k] = acc;
    }
    return r;
  }

  friend PowerSeries1OverS operator*(const PowerSeries1OverS& a, const BigReal& scale) {
    PowerSeries1OverS r = a;
    for (auto& c : r.coeff_) c *= scale;
    return r;
  }

  /// Multiplies by s^(-shift), keeping the truncation order.
  PowerSeries1OverS shifted(size_t shift) const {
    PowerSeries1OverS r(order(), digits_);
    for (size_t k = shift; k <= order(); ++k) r.coeff_[k] = coeff_[k - shift];
    return r;
  }

  /// exp of the series.  The constant term may be nonzero; it contributes a
  /// plain factor e^(r_0).
  PowerSeries1OverS exp() const {
    PowerSeries1OverS g(order(), digits_);
    g.coeff_[0] = hyperbessel::exp(coeff_[0]);
    // g' = f' g  =>  k g_k = sum_{i=1..k} i f_i g_{k-i}
    for (size_t k = 1; k <= order(); ++k) {
      BigReal acc(digits_);
      for (size_t i = 1; i <= k; ++i) acc += static_cast<long>(i) * coeff_[i] * g.coeff_[k - i];
      g.coeff_[k] = acc / static_cast<long>(k);
    }
    return g;
  }

  /// log of the series; requires r_0 > 0.
  PowerSeries1OverS log() const {
    if (coeff_[0].sign() <= 0) {
      throw Error(ErrorKind::DomainError, "log of a series with non-positive leading coefficient");
    }
    PowerSeries1OverS g(order(), digits_);
    g.coeff_[0] = hyperbessel::log(coeff_[0]);
    // f g' = f'  =>  k g_k f_0 = k f_k - sum_{i=1..k-1} i g_i f_{k-i}
    for (size_t k = 1; k <= order(); ++k) {
      BigReal acc = static_cast<long>(k) * coeff_[k];
      for (size_t i = 1; i < k; ++i) acc -= static_cast<long>(i) * g.coeff_[i] * coeff_[k - i];
      g.coeff_[k] = acc / (static_cast<long>(k) * coeff_[0]);
    }
    return g;
  }

 private:
  static size_t common_order(const PowerSeries1OverS& a, const PowerSeries1OverS& b) {
    return std::min(a.order(), b.order());
  }

  std::vector<BigReal> coeff_;
  int digits_;
};

}  // namespace hyperbessel

#endif  // HYPERBESSEL_POWER_SERIES_HPP
