#pragma once

#include "qfock/ratq.hpp"

namespace qfock {

// [n]_i = (q_i^n - q_i^{-n})/(q_i - q_i^{-1}) with q_i = q^scale.
RatQ qint(long n, long scale = 1);
RatQ qfact(long n, long scale = 1);

// Gaussian binomial [m choose n]; zero unless m >= n >= 0.
RatQ qbinom(long m, long n, long scale = 1);
// Same value through the Pascal recurrence
// [m,n] = q^n [m-1,n] + q^{n-m} [m-1,n-1]; used as an independent cross-check.
RatQ qbinom_pascal(long m, long n, long scale = 1);

}  // namespace qfock
