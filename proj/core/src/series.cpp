#include "qfock/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qfock {

QSeries::QSeries(long lo, long hi, std::vector<Rational> coeffs)
    : lo_(lo), hi_(hi), c_(std::move(coeffs)) {
  if (hi_ >= lo_ && c_.size() != static_cast<size_t>(hi_ - lo_ + 1))
    throw std::invalid_argument("QSeries: coefficient count mismatch");
  trim_front();
}

QSeries QSeries::zero(long hi) {
  QSeries s;
  s.lo_ = hi + 1;
  s.hi_ = hi;
  return s;
}

QSeries QSeries::one(long hi) { return from_ratq(RatQ(1), hi); }

void QSeries::trim_front() {
  while (!c_.empty() && c_.front() == 0) {
    c_.erase(c_.begin());
    ++lo_;
  }
  if (c_.empty()) lo_ = hi_ + 1;
}

QSeries QSeries::from_ratq(const RatQ& x, long hi) {
  if (x.is_zero()) return zero(hi);
  const long lo = x.val();
  if (lo > hi) return zero(hi);
  // x = q^v n(q)/d(q); expand n/d as a power series and shift.
  const size_t len = static_cast<size_t>(hi - lo + 1);
  std::vector<Rational> out(len, Rational(0));
  const PolyQ& n = x.num();
  const PolyQ& d = x.den();
  const Rational d0 = d.coeff(0);
  for (size_t k = 0; k < len; ++k) {
    Rational acc = n.coeff(static_cast<int>(k));
    for (size_t j = 1; j <= k; ++j) acc -= d.coeff(static_cast<int>(j)) * out[k - j];
    out[k] = acc / d0;
  }
  return QSeries(lo, hi, std::move(out));
}

Rational QSeries::coeff(long k) const {
  if (k > hi_) throw std::out_of_range("QSeries::coeff: beyond validity");
  if (k < lo_ || c_.empty()) return Rational(0);
  return c_[static_cast<size_t>(k - lo_)];
}

bool QSeries::known_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

QSeries QSeries::operator+(const QSeries& o) const {
  const long hi = std::min(hi_, o.hi_);
  const long lo = std::min(lo_, o.lo_);
  if (hi < lo) return zero(hi);
  std::vector<Rational> out(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (long k = lo; k <= hi; ++k) {
    Rational a = (k >= lo_ && k <= hi_) ? coeff(k) : Rational(0);
    Rational b = (k >= o.lo_ && k <= o.hi_) ? o.coeff(k) : Rational(0);
    out[static_cast<size_t>(k - lo)] = a + b;
  }
  return QSeries(lo, hi, std::move(out));
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
  // (known to hi_) * (known to o.hi_): error terms q^{hi+1} * q^{o.lo}.
  const long hi = std::min(hi_ + o.lo_, o.hi_ + lo_);
  const long lo = lo_ + o.lo_;
  if (c_.empty() || o.c_.empty()) return zero(hi);
  if (hi < lo) return zero(hi);
  std::vector<Rational> out(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      const long k = lo_ + static_cast<long>(i) + o.lo_ + static_cast<long>(j);
      if (k > hi) break;
      out[static_cast<size_t>(k - lo)] += c_[i] * o.c_[j];
    }
  }
  return QSeries(lo, hi, std::move(out));
}

QSeries QSeries::scaled(const Rational& s) const {
  QSeries r = *this;
  for (auto& x : r.c_) x *= s;
  r.trim_front();
  return r;
}

QSeries QSeries::shifted(long e) const {
  QSeries r = *this;
  r.lo_ += e;
  r.hi_ += e;
  return r;
}

QSeries QSeries::inverse() const {
  if (c_.empty() || c_.front() == 0)
    throw std::domain_error("QSeries::inverse: leading coefficient unknown or zero");
  // (q^lo (a0 + a1 q + ...))^{-1}; relative precision is preserved.
  const size_t len = c_.size();
  std::vector<Rational> out(len, Rational(0));
  out[0] = Rational(1) / c_[0];
  for (size_t k = 1; k < len; ++k) {
    Rational acc(0);
    for (size_t j = 1; j <= k; ++j) acc += c_[j] * out[k - j];
    out[k] = -acc / c_[0];
  }
  const long rel = hi_ - lo_;
  return QSeries(-lo_, -lo_ + rel, std::move(out));
}

QSeries QSeries::truncated(long hi) const {
  if (hi >= hi_) return *this;
  if (hi < lo_) return zero(hi);
  std::vector<Rational> out(c_.begin(), c_.begin() + static_cast<size_t>(hi - lo_ + 1));
  return QSeries(lo_, hi, std::move(out));
}

bool QSeries::equal_to(const QSeries& a, const QSeries& b, long hi) {
  if (a.hi_ < hi || b.hi_ < hi) return false;
  const long lo = std::min(a.lo_, b.lo_);
  for (long k = lo; k <= hi; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (long k = lo_; k <= hi_; ++k) {
    const Rational a = coeff(k);
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    const Rational aa = abs(a);
    if (aa != 1 || k == 0) os << aa.get_str() << (k != 0 ? "*" : "");
    if (k == 1) os << "q";
    if (k != 0 && k != 1) os << "q^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << (hi_ + 1) << ")";
  return os.str();
}

WSeries<RatQ> ws_exp(const WSeries<RatQ>& s) {
  WSeries<RatQ> e(s.order);
  e.c[0] = RatQ(1);
  for (int t = 1; t <= s.order; ++t) {
    RatQ acc(0);
    for (int j = 1; j <= t; ++j) acc += RatQ(Rational(j)) * s.c[j] * e.c[t - j];
    e.c[t] = acc * RatQ(frac(1, t));
  }
  return e;
}

WSeries<QSeries> ws_exp(const WSeries<QSeries>& s) {
  if (!s.c[0].known_zero())
    throw std::invalid_argument("ws_exp: constant term must vanish");
  long hi = s.c[0].hi();
  for (const auto& x : s.c) hi = std::min(hi, x.hi());
  WSeries<QSeries> e(s.order);
  e.c[0] = QSeries::one(hi);
  for (int t = 1; t <= s.order; ++t) {
    QSeries acc = QSeries::zero(hi);
    for (int j = 1; j <= t; ++j) acc += (s.c[j] * e.c[t - j]).scaled(Rational(j));
    e.c[t] = acc.scaled(frac(1, t));
  }
  return e;
}

WSeries<RatQ> ws_log(const WSeries<RatQ>& s) {
  if (!(s.c[0] == RatQ(1))) throw std::invalid_argument("ws_log: constant term must be 1");
  WSeries<RatQ> l(s.order);
  for (int t = 1; t <= s.order; ++t) {
    RatQ acc = RatQ(Rational(t)) * s.c[t];
    for (int j = 1; j < t; ++j) acc -= RatQ(Rational(j)) * l.c[j] * s.c[t - j];
    l.c[t] = acc * RatQ(frac(1, t));
  }
  return l;
}

WSeries<QSeries> ws_log(const WSeries<QSeries>& s) {
  WSeries<QSeries> l(s.order);
  const QSeries inv0 = s.c[0].inverse();
  for (int t = 1; t <= s.order; ++t) {
    QSeries acc = s.c[t].scaled(Rational(t));
    for (int j = 1; j < t; ++j) acc += -(l.c[j] * s.c[t - j]).scaled(Rational(j));
    l.c[t] = acc.scaled(frac(1, t)) * inv0;
  }
  return l;
}

WSeries<RatQ> ws_inverse(const WSeries<RatQ>& s) {
  WSeries<RatQ> r(s.order);
  const RatQ inv0 = s.c[0].inverse();
  r.c[0] = inv0;
  for (int t = 1; t <= s.order; ++t) {
    RatQ acc(0);
    for (int j = 1; j <= t; ++j) acc += s.c[j] * r.c[t - j];
    r.c[t] = -(acc * inv0);
  }
  return r;
}

WSeries<QSeries> ws_inverse(const WSeries<QSeries>& s) {
  WSeries<QSeries> r(s.order);
  const QSeries inv0 = s.c[0].inverse();
  r.c[0] = inv0;
  for (int t = 1; t <= s.order; ++t) {
    QSeries acc = s.c[1] * r.c[t - 1];
    for (int j = 2; j <= t; ++j) acc += s.c[j] * r.c[t - j];
    r.c[t] = -(acc * inv0);
  }
  return r;
}

WSeries<RatQ> ws_geometric(const RatQ& a, int j, int T) {
  WSeries<RatQ> r(T);
  RatQ p(1);
  for (int t = 0; t * j <= T; ++t) {
    r.c[t * j] = p;
    p *= a;
    if (j == 0) break;
  }
  if (j == 0) throw std::invalid_argument("ws_geometric: j must be >= 1");
  return r;
}

WSeries<RatQ> ws_linear(const RatQ& a, int j, int T) {
  WSeries<RatQ> r(T);
  r.c[0] = RatQ(1);
  if (j >= 1 && j <= T) r.c[j] = -a;
  return r;
}

WSeries<QSeries> pochhammer(const Rational& coeff, long xq, int xw,
                            const Rational& bcoeff, long bq, int T, long Q) {
  if (bq <= 0) throw std::invalid_argument("pochhammer: base must have positive q-valuation");
  if (xw < 1) throw std::invalid_argument("pochhammer: argument must carry w");
  WSeries<QSeries> acc(T);
  for (int t = 0; t <= T; ++t) acc.c[t] = t == 0 ? QSeries::one(Q) : QSeries::zero(Q);
  Rational c = coeff;
  long e = xq;
  for (long k = 0;; ++k) {
    if (e > Q) break;  // factor is 1 + O(q^{Q+1})
    WSeries<QSeries> factor(T);
    for (int t = 0; t <= T; ++t) factor.c[t] = t == 0 ? QSeries::one(Q) : QSeries::zero(Q);
    if (xw <= T) factor.c[xw] = QSeries::from_ratq(RatQ::monomial(-c, e), Q + e);
    acc = acc * factor;
    c *= bcoeff;
    e += bq;
  }
  return acc;
}

WSeries<QSeries> ws_expand(const WSeries<RatQ>& s, long Q) {
  WSeries<QSeries> r(s.order);
  for (int t = 0; t <= s.order; ++t) r.c[t] = QSeries::from_ratq(s.c[t], Q);
  return r;
}

bool ws_equal(const WSeries<QSeries>& a, const WSeries<QSeries>& b, int T, long Q) {
  if (a.order < T || b.order < T) return false;
  for (int t = 0; t <= T; ++t)
    if (!QSeries::equal_to(a.c[t], b.c[t], Q)) return false;
  return true;
}

}  // namespace qfock
