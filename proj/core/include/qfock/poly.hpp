#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qfock {

using Rational = mpq_class;

// mpq_class's two-argument constructor does not canonicalize; always build
// fractions through this helper.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Dense polynomial in q with rational coefficients. coeff(k) multiplies q^k.
// Invariant: the coefficient vector is empty (zero polynomial) or ends with a
// nonzero coefficient.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(const Rational& constant);
  explicit PolyQ(long constant);
  static PolyQ monomial(const Rational& coeff, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  int low() const;  // lowest exponent with nonzero coefficient; -1 if zero
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }

  PolyQ operator+(const PolyQ& o) const;
  PolyQ operator-(const PolyQ& o) const;
  PolyQ operator*(const PolyQ& o) const;
  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o) { return *this = *this + o; }
  PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }
  bool operator==(const PolyQ& o) const { return c_ == o.c_; }

  PolyQ scaled(const Rational& s) const;
  PolyQ shifted(int k) const;      // multiply by q^k, k >= 0
  PolyQ unshifted(int k) const;    // exact division by q^k
  PolyQ monic() const;             // divide by leading coefficient

  // Euclidean division: *this = q_out * d + r_out with deg r_out < deg d.
  void divmod(const PolyQ& d, PolyQ& q_out, PolyQ& r_out) const;
  PolyQ divided_exactly_by(const PolyQ& d) const;

  static PolyQ gcd(PolyQ a, PolyQ b);  // monic gcd; gcd(0,0) = 0

  Rational eval(const Rational& x) const;
  std::string str() const;  // human-readable, e.g. "1 - q^2 + 3*q^4"

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace qfock
