#ifndef HYPERBESSEL_HYPERBESSEL_HPP
#define HYPERBESSEL_HYPERBESSEL_HPP

#include "hyperbessel/errors.hpp"
#include "hyperbessel/big_real.hpp"
#include "hyperbessel/params.hpp"
#include "hyperbessel/bernoulli.hpp"
#include "hyperbessel/power_series.hpp"
#include "hyperbessel/coeffs.hpp"
#include "hyperbessel/reference.hpp"
#include "hyperbessel/asym.hpp"
#include "hyperbessel/verify.hpp"

#endif  // HYPERBESSEL_HYPERBESSEL_HPP
