#pragma once

#include <string>
#include <vector>

#include "qfock/ratq.hpp"

namespace qfock {

// Truncated Laurent series in q: sum_{k=lo}^{hi} c_{k} q^k + O(q^{hi+1}).
// `hi` is the last exponent whose coefficient is known; arithmetic tracks how
// far results stay valid.
class QSeries {
 public:
  QSeries() = default;  // zero, valid to order -1 (knows nothing)
  QSeries(long lo, long hi, std::vector<Rational> coeffs);
  static QSeries zero(long hi);
  static QSeries one(long hi);
  static QSeries from_ratq(const RatQ& x, long hi);

  long lo() const { return lo_; }
  long hi() const { return hi_; }
  Rational coeff(long k) const;
  bool known_zero() const;  // all known coefficients vanish

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  QSeries scaled(const Rational& s) const;
  QSeries shifted(long e) const;  // multiply by q^e
  QSeries inverse() const;        // leading known coefficient must be nonzero
  QSeries truncated(long hi) const;

  // Equality of all coefficients up to order `hi` (both must know that far).
  static bool equal_to(const QSeries& a, const QSeries& b, long hi);

  std::string str() const;

 private:
  void trim_front();
  long lo_ = 0;
  long hi_ = -1;
  std::vector<Rational> c_;  // size hi_-lo_+1 when hi_ >= lo_, else empty
};

// Polynomial-truncated series in an auxiliary variable w with coefficients in
// C (RatQ or QSeries): sum_{t=0}^{T} c_t w^t.
template <class C>
struct WSeries {
  int order = 0;
  std::vector<C> c;  // size order+1

  explicit WSeries(int T = 0) : order(T), c(T + 1) {}
  static WSeries constant(const C& x, int T) {
    WSeries r(T);
    r.c[0] = x;
    return r;
  }

  WSeries operator+(const WSeries& o) const {
    WSeries r(std::min(order, o.order));
    for (int t = 0; t <= r.order; ++t) r.c[t] = c[t] + o.c[t];
    return r;
  }
  WSeries operator-(const WSeries& o) const {
    WSeries r(std::min(order, o.order));
    for (int t = 0; t <= r.order; ++t) r.c[t] = c[t] - o.c[t];
    return r;
  }
  WSeries operator*(const WSeries& o) const {
    WSeries r(std::min(order, o.order));
    for (int t = 0; t <= r.order; ++t) {
      C acc = c[0] * o.c[t];
      for (int s = 1; s <= t; ++s) acc += c[s] * o.c[t - s];
      r.c[t] = acc;
    }
    return r;
  }
};

// exp of a w-series with zero constant term, computed over Q-linear structure.
WSeries<RatQ> ws_exp(const WSeries<RatQ>& s);
WSeries<QSeries> ws_exp(const WSeries<QSeries>& s);
WSeries<RatQ> ws_log(const WSeries<RatQ>& s);    // constant term 1
WSeries<QSeries> ws_log(const WSeries<QSeries>& s);
// Inverse of a w-series whose constant term is invertible.
WSeries<RatQ> ws_inverse(const WSeries<RatQ>& s);
WSeries<QSeries> ws_inverse(const WSeries<QSeries>& s);

// 1/(1 - a w^j) truncated at order T (a as exact rational function).
WSeries<RatQ> ws_geometric(const RatQ& a, int j, int T);
// 1 - a w^j.
WSeries<RatQ> ws_linear(const RatQ& a, int j, int T);

// Infinite Pochhammer-type product (x; b)_inf = prod_{k>=0} (1 - x b^k)
// truncated at w-order T and q-order Q, where x = coeff * q^xq * w^xw and
// b = bcoeff * q^bq. Requires bq > 0 (otherwise the product does not converge
// q-adically) and xw >= 1.
WSeries<QSeries> pochhammer(const Rational& coeff, long xq, int xw,
                            const Rational& bcoeff, long bq, int T, long Q);

// Expand a WSeries<RatQ> into q-series coefficients to order Q.
WSeries<QSeries> ws_expand(const WSeries<RatQ>& s, long Q);

bool ws_equal(const WSeries<QSeries>& a, const WSeries<QSeries>& b, int T, long Q);

}  // namespace qfock
