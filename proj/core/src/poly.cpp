#include "qfock/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qfock {

PolyQ::PolyQ(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

PolyQ::PolyQ(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

PolyQ PolyQ::monomial(const Rational& coeff, int degree) {
  PolyQ p;
  if (coeff == 0) return p;
  if (degree < 0) throw std::invalid_argument("PolyQ::monomial: negative degree");
  p.c_.assign(degree + 1, Rational(0));
  p.c_[degree] = coeff;
  return p;
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int PolyQ::low() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Rational PolyQ::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
  PolyQ r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
  r.trim();
  return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
  PolyQ r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

PolyQ PolyQ::scaled(const Rational& s) const {
  if (s == 0) return PolyQ();
  PolyQ r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

PolyQ PolyQ::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("PolyQ::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  PolyQ r;
  r.c_.assign(c_.size() + k, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

PolyQ PolyQ::unshifted(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (low() < k) throw std::invalid_argument("PolyQ::unshifted: not divisible by q^k");
  PolyQ r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

void PolyQ::divmod(const PolyQ& d, PolyQ& q_out, PolyQ& r_out) const {
  if (d.is_zero()) throw std::invalid_argument("PolyQ::divmod: division by zero");
  q_out = PolyQ();
  r_out = *this;
  const int dd = d.degree();
  while (!r_out.is_zero() && r_out.degree() >= dd) {
    const int k = r_out.degree() - dd;
    const Rational f = r_out.leading() / d.leading();
    q_out += PolyQ::monomial(f, k);
    r_out = r_out - d * PolyQ::monomial(f, k);
  }
}

PolyQ PolyQ::divided_exactly_by(const PolyQ& d) const {
  PolyQ q, r;
  divmod(d, q, r);
  if (!r.is_zero()) throw std::logic_error("PolyQ: inexact division");
  return q;
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ q, r;
    a.divmod(b, q, r);
    a = b;
    b = r;
  }
  return a.monic();
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::string PolyQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    a = abs(a);
    if (a != 1 || k == 0) {
      os << a.get_str();
      if (k > 0) os << "*";
    }
    if (k == 1) os << "q";
    if (k > 1) os << "q^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace qfock
