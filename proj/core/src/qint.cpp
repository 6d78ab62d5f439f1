#include "qfock/qint.hpp"

namespace qfock {

RatQ qint(long n, long scale) {
  if (n == 0) return RatQ(0);
  if (n < 0) return -qint(-n, scale);
  // [n] = q^{-(n-1)} (1 + q^2 + ... + q^{2(n-1)}), with q -> q^scale.
  PolyQ p;
  for (long k = 0; k < n; ++k)
    p += PolyQ::monomial(Rational(1), static_cast<int>(2 * k * scale));
  return RatQ(-(n - 1) * scale, std::move(p), PolyQ(1L));
}

RatQ qfact(long n, long scale) {
  RatQ r(1);
  for (long k = 2; k <= n; ++k) r *= qint(k, scale);
  return r;
}

RatQ qbinom(long m, long n, long scale) {
  if (n < 0 || m < n) return RatQ(0);
  RatQ r(1);
  for (long k = 0; k < n; ++k) r *= qint(m - k, scale);
  return r / qfact(n, scale);
}

RatQ qbinom_pascal(long m, long n, long scale) {
  if (n < 0 || m < n) return RatQ(0);
  if (n == 0 || n == m) return RatQ(1);
  return RatQ::q(n * scale) * qbinom_pascal(m - 1, n, scale) +
         RatQ::q((n - m) * scale) * qbinom_pascal(m - 1, n - 1, scale);
}

}  // namespace qfock
