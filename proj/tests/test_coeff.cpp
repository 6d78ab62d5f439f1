#include <random>

#include "doctest.h"
#include "qfock/qint.hpp"
#include "qfock/ratq.hpp"
#include "qfock/series.hpp"

using namespace qfock;

namespace {

RatQ random_ratq(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3), shift(-3, 3);
  auto poly = [&](bool nonzero) {
    PolyQ p;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) p += PolyQ::monomial(Rational(coeff(rng)), k);
    if (nonzero && p.is_zero()) p = PolyQ(1L);
    return p;
  };
  PolyQ den = poly(true);
  return RatQ(shift(rng), poly(false), den);
}

}  // namespace

TEST_CASE("q-integers and products") {
  const RatQ two = qint(2);
  CHECK(two == RatQ::q(1) + RatQ::q(-1));
  CHECK(two * two == RatQ::q(2) + RatQ(2) + RatQ::q(-2));
  CHECK(qint(2, 2) == RatQ::q(2) + RatQ::q(-2));
  CHECK(qint(-3) == -qint(3));
  CHECK(qint(1, 4) == RatQ(1));
}

TEST_CASE("canonical reduction") {
  const RatQ x = (RatQ(1) - RatQ::q(6)) / (RatQ(1) - RatQ::q(4));
  PolyQ num;  // 1 + q^2 + q^4
  num += PolyQ::monomial(Rational(1), 0);
  num += PolyQ::monomial(Rational(1), 2);
  num += PolyQ::monomial(Rational(1), 4);
  PolyQ den;  // 1 + q^2
  den += PolyQ::monomial(Rational(1), 0);
  den += PolyQ::monomial(Rational(1), 2);
  CHECK(x.num() == num);
  CHECK(x.den() == den);
  CHECK(x.vpow() == 0);

  // q-adic valuation read off without expansion.
  const RatQ y = (RatQ(1) - RatQ::q(6)) / (RatQ::q(4) - RatQ::q(6));
  CHECK(y.val() == -4);
  const RatQ z = RatQ::q(3) * (RatQ(2) + RatQ::q(1));
  CHECK(z.val() == 3);
}

TEST_CASE("division identities") {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    const RatQ x = random_ratq(rng);
    if (x.is_zero()) continue;
    CHECK(x / x == RatQ(1));
    CHECK(x * x.inverse() == RatQ(1));
  }
  CHECK_THROWS(RatQ(1) / RatQ(0));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (int it = 0; it < 40; ++it) {
    const RatQ a = random_ratq(rng), b = random_ratq(rng), c = random_ratq(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("Gaussian binomials") {
  CHECK(qbinom(1, 0) == RatQ(1));
  CHECK(qbinom(1, 1) == RatQ(1));
  CHECK(qbinom(3, 5) == RatQ(0));
  CHECK(qbinom(4, -1) == RatQ(0));

  // qbinom(4,2) = q^4 + q^2 + 2 + q^-2 + q^-4
  const RatQ b42 = qbinom(4, 2);
  CHECK(b42 == RatQ::q(4) + RatQ::q(2) + RatQ(2) + RatQ::q(-2) + RatQ::q(-4));

  for (long m = 0; m <= 6; ++m)
    for (long n = 0; n <= m; ++n) {
      CHECK(qbinom(m, n) == qbinom_pascal(m, n));
      CHECK(qbinom(m, n, 2) == qbinom_pascal(m, n, 2));
    }
}

TEST_CASE("alternating binomial sum factors") {
  // sum_j (-eta)^j [n,j] = prod_{i=0}^{n-1} (q^{n-1-2i} - eta), checked for
  // n <= 6 at more rational eta samples than the eta-degree, which certifies
  // the polynomial identity; eta = q^m on the even ladder gives zero.
  for (long n = 1; n <= 6; ++n) {
    for (long s = 0; s <= n + 1; ++s) {
      const RatQ eta = RatQ(frac(2 * s + 1, 3));
      RatQ sum(0);
      for (long j = 0; j <= n; ++j) sum += (-eta).pow(j) * qbinom(n, j);
      RatQ prod(1);
      for (long i = 0; i < n; ++i) prod *= RatQ::q(n - 1 - 2 * i) - eta;
      CHECK(sum == prod);
    }
    for (long m = -n + 1; m <= n - 1; m += 2) {
      RatQ sum(0);
      for (long j = 0; j <= n; ++j) sum += (-RatQ::q(m)).pow(j) * qbinom(n, j);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("q-series expansion") {
  const RatQ x = RatQ(1) / (RatQ(1) + RatQ::q(2));
  const QSeries s = QSeries::from_ratq(x, 9);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(2) == -1);
  CHECK(s.coeff(4) == 1);
  CHECK(s.coeff(6) == -1);
  CHECK(s.coeff(3) == 0);

  // Expansion is a ring map up to the tracked order.
  std::mt19937 rng(23);
  for (int it = 0; it < 25; ++it) {
    const RatQ a = random_ratq(rng), b = random_ratq(rng);
    const long Q = 8;
    const QSeries sa = QSeries::from_ratq(a, Q), sb = QSeries::from_ratq(b, Q);
    CHECK(QSeries::equal_to(QSeries::from_ratq(a + b, Q), sa + sb, Q));
    const QSeries prod = sa * sb;
    CHECK(QSeries::equal_to(QSeries::from_ratq(a * b, prod.hi()), prod, prod.hi()));
  }

  // Idempotence: re-truncating an expansion changes nothing.
  const QSeries t = QSeries::from_ratq(x, 20);
  CHECK(QSeries::equal_to(t.truncated(9), s, 9));
}

TEST_CASE("series inverse") {
  std::mt19937 rng(31);
  for (int it = 0; it < 25; ++it) {
    RatQ a = random_ratq(rng);
    if (a.is_zero()) a = RatQ(1) + RatQ::q(1);
    const QSeries s = QSeries::from_ratq(a, 10 + a.val());
    const QSeries inv = s.inverse();
    const QSeries prod = s * inv;
    CHECK(QSeries::equal_to(prod, QSeries::one(prod.hi()), prod.hi()));
  }
}

TEST_CASE("w-series exp/log inverse pair") {
  const int T = 6;
  WSeries<RatQ> onepw(T);
  onepw.c[0] = RatQ(1);
  onepw.c[1] = RatQ(1);
  const WSeries<RatQ> back = ws_exp(ws_log(onepw));
  for (int t = 0; t <= T; ++t) CHECK(back.c[t] == onepw.c[t]);

  std::mt19937 rng(41);
  WSeries<RatQ> s(T);
  for (int t = 1; t <= T; ++t) s.c[t] = random_ratq(rng);
  const WSeries<RatQ> e = ws_exp(s);
  const WSeries<RatQ> l = ws_log(e);
  for (int t = 1; t <= T; ++t) CHECK(l.c[t] == s.c[t]);

  const WSeries<RatQ> inv = ws_inverse(e);
  const WSeries<RatQ> prod = e * inv;
  CHECK(prod.c[0] == RatQ(1));
  for (int t = 1; t <= T; ++t) CHECK(prod.c[t].is_zero());
}

TEST_CASE("Pochhammer products") {
  // (q^2 w; q^4)_inf truncated at (T=2, Q=10): 1 - (q^2+q^6+q^10) w + q^8 w^2.
  const WSeries<QSeries> p = pochhammer(Rational(1), 2, 1, Rational(1), 4, 2, 10);
  QSeries w1 = QSeries::from_ratq(-(RatQ::q(2) + RatQ::q(6) + RatQ::q(10)), 10);
  QSeries w2 = QSeries::from_ratq(RatQ::q(8), 10);
  CHECK(QSeries::equal_to(p.c[0], QSeries::one(10), 10));
  CHECK(QSeries::equal_to(p.c[1], w1, 10));
  CHECK(QSeries::equal_to(p.c[2], w2, 10));

  CHECK_THROWS(pochhammer(Rational(1), 0, 1, Rational(1), 0, 2, 10));
}

TEST_CASE("stretched substitution") {
  const RatQ x = (RatQ(1) - RatQ::q(3)) / (RatQ(1) + RatQ::q(1));
  const RatQ y = x.stretched(2);
  CHECK(y == (RatQ(1) - RatQ::q(6)) / (RatQ(1) + RatQ::q(2)));
  CHECK(qint(5).stretched(3) == qint(5, 3));
}

TEST_CASE("value at q=0") {
  CHECK((RatQ(1) / (RatQ(1) + RatQ::q(2))).at_q0() == 1);
  CHECK((RatQ::q(1) * RatQ(7)).at_q0() == 0);
  CHECK_THROWS(RatQ::q(-1).at_q0());
  const RatQ g = (RatQ(1) - RatQ::q(6)) / (RatQ(1) - RatQ::q(4));
  CHECK(g.at_q0() == 1);
}
