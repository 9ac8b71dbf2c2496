#ifndef HYPERBESSEL_BERNOULLI_HPP
#define HYPERBESSEL_BERNOULLI_HPP

#include <vector>

#include "hyperbessel/big_real.hpp"

namespace hyperbessel {

/// Exact Bernoulli numbers B_0..B_count-1 (B_1 = -1/2) from
/// sum_{k=0}^{m} C(m+1, k) B_k = 0.
inline std::vector<Rational> bernoulli_numbers(size_t count) {
  std::vector<Rational> B;
  B.reserve(count);
  for (size_t m = 0; m < count; ++m) {
    if (m == 0) {
      B.emplace_back(1);
      continue;
    }
    Rational acc = 0;
    mpz_class binom = 1;  // C(m+1, k), starting at k = 0
    for (size_t k = 0; k < m; ++k) {
      acc += binom * B[k];
      binom = binom * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    Rational bm = -acc / Rational(static_cast<long>(m + 1));
    bm.canonicalize();
    B.push_back(bm);
  }
  return B;
}

/// B_n(x) = sum_k C(n, k) B_k x^(n-k), exactly.
inline Rational bernoulli_polynomial(size_t degree, const Rational& x, const std::vector<Rational>& numbers) {
  Rational acc = 0;
  mpz_class binom = 1;
  for (size_t k = 0; k <= degree; ++k) {
    Rational x_pow = 1;
    for (size_t e = 0; e < degree - k; ++e) x_pow *= x;
    acc += binom * numbers.at(k) * x_pow;
    binom = binom * static_cast<unsigned long>(degree - k) / static_cast<unsigned long>(k + 1);
  }
  acc.canonicalize();
  return acc;
}

}  // namespace hyperbessel

#endif  // HYPERBESSEL_BERNOULLI_HPP
