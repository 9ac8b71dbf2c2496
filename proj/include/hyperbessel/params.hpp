#ifndef HYPERBESSEL_PARAMS_HPP
#define HYPERBESSEL_PARAMS_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "hyperbessel/big_real.hpp"
#include "hyperbessel/errors.hpp"

namespace hyperbessel {

/// Parameters of
///
///   F_n(x) = sum_k (-1)^k (x/n)^(nk) / (Gamma(k+b_1) ... Gamma(k+b_{n-1}) k!)
///
/// together with the constants of its exponential asymptotics:
/// kappa = n, sigma = sum b_j, theta = (n-1)/2 - sigma, theta' = 1 - theta and
/// A0 = n^(-1/2-theta) / (2 pi)^((n-1)/2).
///
/// The b_j and every derived quantity except A0 are exact rationals, so a
/// parameter set can be re-rounded to any working precision without loss.
struct ExpansionParams {
  int n = 3;
  std::vector<Rational> b_list;
  Rational kappa;
  Rational sigma;
  Rational theta;
  Rational theta_prime;
  BigReal A0;
  int digits = kMinDigits;

  BigReal b(size_t j) const { return BigReal(b_list.at(j), digits); }
  BigReal theta_real() const { return BigReal(theta, digits); }

  ExpansionParams with_digits(int new_digits) const;

  /// "2/3,5/6" style rendering of b_list.
  std::string b_list_string() const {
    std::string out;
    for (size_t j = 0; j < b_list.size(); ++j) {
      if (j) out += ',';
      out += to_string(b_list[j]);
    }
    return out;
  }

  /// Same order and same parameter multiset (order-insensitive).
  bool same_function(const ExpansionParams& other) const {
    if (n != other.n) return false;
    auto lhs = b_list, rhs = other.b_list;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
  }
};

inline ExpansionParams derive_params(int n, std::vector<Rational> b_list, int digits) {
  if (n < 3 || n > 5) {
    throw Error(ErrorKind::OrderUnsupported, "order n=" + std::to_string(n) + " (supported: 3, 4, 5)");
  }
  if (b_list.size() != static_cast<size_t>(n - 1)) {
    throw Error(ErrorKind::ArityMismatch, "order " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                                              " parameters, got " + std::to_string(b_list.size()));
  }
  for (const auto& b : b_list) {
    if (is_nonpositive_integer(b)) {
      throw Error(ErrorKind::PoleParameter, "parameter " + to_string(b) + " is a non-positive integer");
    }
  }
  if (digits < kMinDigits) {
    throw Error(ErrorKind::PrecisionInsufficient,
                "working precision " + std::to_string(digits) + " < " + std::to_string(kMinDigits) + " digits");
  }

  ExpansionParams p;
  p.n = n;
  p.digits = digits;
  p.kappa = n;
  p.sigma = std::accumulate(b_list.begin(), b_list.end(), Rational(0));
  p.theta = Rational(n - 1, 2) - p.sigma;
  p.theta.canonicalize();
  p.theta_prime = 1 - p.theta;
  p.b_list = std::move(b_list);

  BigReal two_pi = 2 * pi(digits);
  BigReal exponent(Rational(-1, 2) - p.theta, digits);
  p.A0 = pow(BigReal(n, digits), exponent) / pow(two_pi, BigReal(Rational(n - 1, 2), digits));
  return p;
}

inline ExpansionParams ExpansionParams::with_digits(int new_digits) const {
  return derive_params(n, b_list, new_digits);
}

/// Convenience for the Humbert / 0F2 case: b_list = (a, b).
inline ExpansionParams derive_params_n3(const Rational& a, const Rational& b, int digits) {
  return derive_params(3, {a, b}, digits);
}

}  // namespace hyperbessel

#endif  // HYPERBESSEL_PARAMS_HPP
