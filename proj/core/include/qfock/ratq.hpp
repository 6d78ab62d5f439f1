#pragma once

#include <limits>
#include <string>

#include "qfock/poly.hpp"

namespace qfock {

// Element of Q(q), kept canonical as q^v * num/den with
//   - num, den in Q[q] with nonzero constant term,
//   - den monic with gcd(num, den) = 1,
//   - num = 0 represented as v = 0, num = 0, den = 1.
// The q-adic valuation of a nonzero element is then exactly v.
class RatQ {
 public:
  RatQ() : den_(1L) {}
  RatQ(long c) : num_(c), den_(1L) {}  // NOLINT: implicit by design
  explicit RatQ(const Rational& c) : num_(c), den_(1L) {}
  RatQ(long v, PolyQ num, PolyQ den);

  static RatQ q(long e = 1) { return monomial(Rational(1), e); }
  static RatQ monomial(const Rational& coeff, long e);

  bool is_zero() const { return num_.is_zero(); }
  // q-adic valuation; LONG_MAX for the zero element.
  long val() const { return is_zero() ? std::numeric_limits<long>::max() : v_; }
  long vpow() const { return v_; }
  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_laurent() const { return den_.degree() == 0; }

  RatQ operator+(const RatQ& o) const;
  RatQ operator-(const RatQ& o) const;
  RatQ operator*(const RatQ& o) const;
  RatQ operator/(const RatQ& o) const;
  RatQ operator-() const;
  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  RatQ& operator/=(const RatQ& o) { return *this = *this / o; }
  bool operator==(const RatQ& o) const {
    return v_ == o.v_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatQ& o) const { return !(*this == o); }

  RatQ inverse() const;
  RatQ pow(long k) const;
  // Substitute q -> q^s (s >= 1).
  RatQ stretched(long s) const;
  // Value at q = 0; requires val() >= 0.
  Rational at_q0() const;
  // Substitute a rational value for q; the denominator must not vanish there.
  Rational eval(const Rational& x) const;

  std::string str() const;

 private:
  void canonicalize();
  long v_ = 0;
  PolyQ num_;
  PolyQ den_;
};

inline RatQ operator*(long a, const RatQ& x) { return RatQ(a) * x; }

}  // namespace qfock
