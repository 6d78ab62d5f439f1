#include "qfock/ratq.hpp"

#include <sstream>
#include <stdexcept>

namespace qfock {

RatQ::RatQ(long v, PolyQ num, PolyQ den) : v_(v), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

RatQ RatQ::monomial(const Rational& coeff, long e) {
  RatQ r;
  r.v_ = e;
  r.num_ = PolyQ(coeff);
  r.den_ = PolyQ(1L);
  r.canonicalize();
  return r;
}

void RatQ::canonicalize() {
  if (den_.is_zero()) throw std::invalid_argument("RatQ: zero denominator");
  if (num_.is_zero()) {
    v_ = 0;
    den_ = PolyQ(1L);
    return;
  }
  const int ln = num_.low();
  if (ln > 0) {
    num_ = num_.unshifted(ln);
    v_ += ln;
  }
  const int ld = den_.low();
  if (ld > 0) {
    den_ = den_.unshifted(ld);
    v_ -= ld;
  }
  PolyQ g = PolyQ::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divided_exactly_by(g);
    den_ = den_.divided_exactly_by(g);
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    den_ = den_.scaled(Rational(1) / lead);
    num_ = num_.scaled(Rational(1) / lead);
  }
}

RatQ RatQ::operator+(const RatQ& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RatQ r;
  const long v = std::min(v_, o.v_);
  r.v_ = v;
  r.num_ = num_.shifted(static_cast<int>(v_ - v)) * o.den_ +
           o.num_.shifted(static_cast<int>(o.v_ - v)) * den_;
  r.den_ = den_ * o.den_;
  r.canonicalize();
  return r;
}

RatQ RatQ::operator-(const RatQ& o) const { return *this + (-o); }

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQ RatQ::operator*(const RatQ& o) const {
  RatQ r;
  r.v_ = v_ + o.v_;
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.canonicalize();
  return r;
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw std::domain_error("RatQ: division by zero");
  RatQ r;
  r.v_ = -v_;
  r.num_ = den_;
  r.den_ = num_;
  r.canonicalize();
  return r;
}

RatQ RatQ::operator/(const RatQ& o) const { return *this * o.inverse(); }

RatQ RatQ::pow(long k) const {
  if (k == 0) return RatQ(1);
  if (k < 0) return inverse().pow(-k);
  RatQ acc(1), base = *this;
  long e = k;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

static PolyQ stretch_poly(const PolyQ& p, long s) {
  PolyQ r;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational a = p.coeff(k);
    if (a != 0) r += PolyQ::monomial(a, static_cast<int>(k * s));
  }
  return r;
}

RatQ RatQ::stretched(long s) const {
  if (s < 1) throw std::invalid_argument("RatQ::stretched: s must be >= 1");
  if (is_zero()) return *this;
  return RatQ(v_ * s, stretch_poly(num_, s), stretch_poly(den_, s));
}

Rational RatQ::at_q0() const {
  if (is_zero()) return Rational(0);
  if (v_ < 0) throw std::domain_error("RatQ::at_q0: pole at q=0");
  if (v_ > 0) return Rational(0);
  return num_.coeff(0) / den_.coeff(0);
}

Rational RatQ::eval(const Rational& x) const {
  if (is_zero()) return Rational(0);
  const Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("RatQ::eval: denominator vanishes");
  Rational r = num_.eval(x) / d;
  if (v_ != 0) {
    if (x == 0) {
      if (v_ < 0) throw std::domain_error("RatQ::eval: pole at 0");
      return Rational(0);
    }
    Rational p(1);
    const long e = v_ < 0 ? -v_ : v_;
    for (long k = 0; k < e; ++k) p *= x;
    if (v_ > 0)
      r *= p;
    else
      r /= p;
  }
  return r;
}

std::string RatQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const bool have_v = v_ != 0;
  const bool have_den = den_.degree() > 0;
  if (have_v) {
    os << "q^" << v_ << "*";
  }
  if (have_den) {
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
  } else if (num_.degree() > 0 && have_v) {
    os << "(" << num_.str() << ")";
  } else {
    os << num_.str();
  }
  return os.str();
}

}  // namespace qfock
