#include <qfock/wedge.hpp>

#include <qfock/qint.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qfock {

std::string word_str(const Word& w) {
  std::ostringstream os;
  for (std::size_t r = 0; r < w.size(); ++r) {
    if (r) os << " ^ ";
    os << elem_str(w[r]);
  }
  return os.str();
}

WedgeVector WedgeVector::monomial(Word w, const RatQ& c) {
  WedgeVector v(static_cast<int>(w.size()));
  v.add(w, c);
  return v;
}

void WedgeVector::add(const Word& w, const RatQ& c) {
  normal = false;
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

RatQ WedgeVector::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? RatQ() : it->second;
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& o) {
  if (arity != o.arity) throw std::invalid_argument("WedgeVector: arity mismatch");
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& o) {
  if (arity != o.arity) throw std::invalid_argument("WedgeVector: arity mismatch");
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

void WedgeVector::scale(const RatQ& c) {
  if (c.is_zero()) {
    terms.clear();
    return;
  }
  for (auto& [w, coeff] : terms) coeff *= c;
}

std::string WedgeVector::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") " << word_str(w);
  }
  return os.str();
}

void SymPoly::add(std::vector<long> expo, const RatQ& c) {
  if (static_cast<int>(expo.size()) != arity)
    throw std::invalid_argument("SymPoly: exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = monomials.emplace(std::move(expo), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) monomials.erase(it);
}

bool SymPoly::symmetric() const {
  for (const auto& [expo, c] : monomials) {
    for (int k = 0; k + 1 < arity; ++k) {
      if (expo[k] == expo[k + 1]) continue;
      auto swapped = expo;
      std::swap(swapped[k], swapped[k + 1]);
      auto it = monomials.find(swapped);
      if (it == monomials.end() || !(it->second == c)) return false;
    }
  }
  return true;
}

SymPoly power_sum(int arity, long t) {
  SymPoly f(arity);
  if (t == 0) {
    f.add(std::vector<long>(static_cast<std::size_t>(arity), 0), RatQ(arity));
    return f;
  }
  for (int k = 0; k < arity; ++k) {
    std::vector<long> expo(static_cast<std::size_t>(arity), 0);
    expo[static_cast<std::size_t>(k)] = t;
    f.add(std::move(expo), RatQ(1));
  }
  return f;
}

SymPoly zsym_op(long t, long d) {
  SymPoly f(2);
  f.add({t, d - t}, RatQ(1));
  if (2 * t > d) f.add({d - t, t}, RatQ(1));
  if (2 * t < d) f.add({t, d - t}, RatQ(-1));
  return f;
}

std::string membership_str(Membership m) {
  switch (m) {
    case Membership::kYes:
      return "yes";
    case Membership::kNo:
      return "no";
    case Membership::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// x -> (z^c (x) ... (x) z^c) x
WedgeVector zz_shift(const WedgeVector& v, long c) {
  WedgeVector out(v.arity);
  for (const auto& [w, coeff] : v.terms) {
    Word nw = w;
    for (auto& b : nw) b = b.shifted(c);
    out.add(nw, coeff);
  }
  return out;
}

bool is_integer_constant(const RatQ& c) {
  if (c.is_zero()) return true;
  if (c.vpow() != 0 || !c.is_laurent() || c.num().degree() != 0) return false;
  return c.num().coeff(0).get_den() == 1;
}

}  // namespace

WedgeSpace::WedgeSpace(Crystal crystal) : crystal_(std::move(crystal)) {
  const Family fam = type().family();
  extremal_letter_ = (fam == Family::A1 || fam == Family::A1k) ? 0 : 1;
}

const WedgeVector& WedgeSpace::rel_base(int i, int j) const {
  if (!crystal_.valid_letter(i) || !crystal_.valid_letter(j))
    throw std::invalid_argument("rel_base: not a letter of this crystal");
  const auto key = std::make_pair(i, j);
  if (auto it = base_.find(key); it != base_.end()) return it->second;
  WedgeVector built = build_base(i, j);
  return base_.emplace(key, std::move(built)).first->second;
}

WedgeVector WedgeSpace::build_base(int i, int j) const {
  switch (type().family()) {
    case Family::A1:
      return a1_base(i, j);
    case Family::A1k:
      return a1k_base(i, j);
    default:
      return combined_base(i, j);
  }
}

WedgeVector WedgeSpace::a1_base(int i, int j) const {
  WedgeVector out(2);
  if (i == j) {
    out.add({{i, 0}, {i, 0}}, RatQ(1));
    return out;
  }
  const long h = crystal_.energy_letters(i, j);
  out.add({{i, 0}, {j, -h}}, RatQ(1));
  out.add({{j, -h}, {i, 0}}, RatQ::q(1));
  return out;
}

WedgeVector WedgeSpace::a1k_base(int i, int j) const {
  const int k = type().level();
  const long h = crystal_.energy_letters(i, j);
  WedgeVector out(2);
  for (int i2 = 0; i2 <= k; ++i2) {
    const int j2 = i + j - i2;
    if (j2 < 0 || j2 > k) continue;
    for (long a = 0; a <= h; ++a) {
      const long b = h - a;
      RatQ c;
      if (i + j <= k)
        c = RatQ::q((k - j2) * (i2 - b) + (k - i2) * a) * qbinom(j2, a) * qbinom(i2, b);
      else
        c = RatQ::q(i2 * (k - j2 - b) + j2 * a) * qbinom(k - i2, a) * qbinom(k - j2, b);
      out.add({{i2, -a}, {j2, -b}}, c);
    }
  }
  return out;
}

// The level-1 tables of the big families: the hat layer C~ of displayed
// generators, then the triangular combinations that make condition (R) hold.
WedgeVector WedgeSpace::build_tilde(int i, int j) const {
  const Family fam = type().family();
  const int n = type().rank();
  const long h = crystal_.energy_letters(i, j);
  WedgeVector out(2);
  auto W = [&](int l1, long z1, int l2, long z2, const RatQ& c) {
    out.add({{l1, z1}, {l2, z2}}, c);
  };
  const RatQ one(1), q1 = RatQ::q(1), q2 = RatQ::q(2), q4 = RatQ::q(4);
  const RatQ q2br = RatQ::q(2) * qint(2);

  switch (fam) {
    case Family::A2even:
      if (i == j && i != 0) {
        W(i, 0, i, 0, one);
      } else if (i == 0 && j == 0) {
        W(0, 0, 0, -1, one);
        W(-n, 0, n, -1, q2br);
        W(n, -1, -n, 0, q2br);
        W(0, -1, 0, 0, q2);
      } else if (i == n && j == -n) {
        W(n, 0, -n, 0, one);
        W(0, 0, 0, 0, q1);
        W(-n, 0, n, 0, q4);
      } else if (i == -1 && j == 1) {
        W(-1, 0, 1, -1, one);
        W(1, -1, -1, 0, q4);
      } else if (j == -i) {
        W(i, 0, -i, -h, one);
        W(i + 1, 0, -i - 1, -h, q2);
        W(-i - 1, -h, i + 1, 0, q2);
        W(-i, -h, i, 0, q4);
      } else {
        W(i, 0, j, -h, one);
        W(j, -h, i, 0, q2);
      }
      break;

    case Family::B1:
      if (i == j && i != 0) {
        W(i, 0, i, 0, one);
      } else if (i == 0 && j == 0) {
        W(0, 0, 0, -1, one);
        W(-n, 0, n, -1, q2br);
        W(n, -1, -n, 0, q2br);
        W(0, -1, 0, 0, q2);
      } else if (i == n && j == -n) {
        W(n, 0, -n, 0, one);
        W(0, 0, 0, 0, q1);
        W(-n, 0, n, 0, q4);
      } else if (i == -1 && j == 1) {
        W(-1, 0, 1, -2, one);
        W(-2, -1, 2, -1, q2);
        W(2, -1, -2, -1, q2);
        W(1, -2, -1, 0, q4);
      } else if (j == -i) {
        W(i, 0, -i, -h, one);
        W(i + 1, 0, -i - 1, -h, q2);
        W(-i - 1, -h, i + 1, 0, q2);
        W(-i, -h, i, 0, q4);
      } else {
        W(i, 0, j, -h, one);
        W(j, -h, i, 0, q2);
      }
      break;

    case Family::A2odd:
      if (i == j) {
        W(i, 0, i, 0, one);
      } else if (i == n && j == -n) {
        W(n, 0, -n, 0, one);
        W(-n, 0, n, 0, q2);
      } else if (i == -1 && j == 1) {
        W(-1, 0, 1, -2, one);
        W(-2, -1, 2, -1, q1);
        W(2, -1, -2, -1, q1);
        W(1, -2, -1, 0, q2);
      } else if (j == -i) {
        W(i, 0, -i, -h, one);
        W(i + 1, 0, -i - 1, -h, q1);
        W(-i - 1, -h, i + 1, 0, q1);
        W(-i, -h, i, 0, q2);
      } else {
        W(i, 0, j, -h, one);
        W(j, -h, i, 0, q1);
      }
      break;

    case Family::D1:
      if (i == j) {
        W(i, 0, i, 0, one);
      } else if (i == n && j == -n) {
        W(n, 0, -n, -1, one);
        W(1 - n, 0, n - 1, -1, q1);
        W(n - 1, -1, 1 - n, 0, q1);
        W(-n, -1, n, 0, q2);
      } else if (i == -1 && j == 1) {
        W(-1, 0, 1, -2, one);
        W(-2, -1, 2, -1, q1);
        W(2, -1, -2, -1, q1);
        W(1, -2, -1, 0, q2);
      } else if (j == -i) {
        W(i, 0, -i, -h, one);
        W(i + 1, 0, -i - 1, -h, q1);
        W(-i - 1, -h, i + 1, 0, q1);
        W(-i, -h, i, 0, q2);
      } else {
        W(i, 0, j, -h, one);
        W(j, -h, i, 0, q1);
      }
      break;

    case Family::D2:
      if (i == j && i != 0 && i != kPhi) {
        W(i, 0, i, 0, one);
      } else if (i == 0 && j == 0) {
        W(0, 0, 0, -2, one);
        W(-n, 0, n, -2, q2br);
        W(n, -2, -n, 0, q2br);
        W(0, -2, 0, 0, q2);
      } else if (i == kPhi && j == kPhi) {
        W(kPhi, 0, kPhi, -2, one);
        W(1, -1, -1, -1, q2br);
        W(-1, -1, 1, -1, q2br);
        W(kPhi, -2, kPhi, 0, q2);
      } else if (i == n && j == -n) {
        W(n, 0, -n, 0, one);
        W(0, 0, 0, 0, q1);
        W(-n, 0, n, 0, q4);
      } else if (i == -1 && j == 1) {
        W(-1, 0, 1, -2, one);
        W(kPhi, -1, kPhi, -1, q1);
        W(1, -2, -1, 0, q4);
      } else if (i != kPhi && j != kPhi && j == -i) {
        W(i, 0, -i, -h, one);
        W(i + 1, 0, -i - 1, -h, q2);
        W(-i - 1, -h, i + 1, 0, q2);
        W(-i, -h, i, 0, q4);
      } else {
        W(i, 0, j, -h, one);
        W(j, -h, i, 0, q2);
      }
      break;

    default:
      throw std::logic_error("build_tilde: family has a direct table");
  }
  return out;
}

WedgeVector WedgeSpace::combined_base(int i, int j) const {
  const Family fam = type().family();
  const int n = type().rank();
  const RatQ ratio = -RatQ::q(
      (fam == Family::A2even || fam == Family::B1 || fam == Family::D2) ? 2 : 1);
  const RatQ q2br = RatQ::q(2) * qint(2);

  // C_{k,-k} = sum_{k'=k}^{top} (-x)^{k'-k} C~_{k',-k'}
  auto telescope_pos = [&](int k, int top) {
    WedgeVector out(2);
    RatQ c(1);
    for (int k2 = k; k2 <= top; ++k2, c *= ratio) {
      WedgeVector t = build_tilde(k2, -k2);
      t.scale(c);
      out += t;
    }
    return out;
  };
  // C_{-k,k} = sum_{k'=lo}^{k} (-x)^{k-k'} C~_{-k',k'}
  auto telescope_neg = [&](int k, int lo) {
    WedgeVector out(2);
    RatQ c(1);
    for (int k2 = k; k2 >= lo; --k2, c *= ratio) {
      WedgeVector t = build_tilde(-k2, k2);
      t.scale(c);
      out += t;
    }
    return out;
  };

  switch (fam) {
    case Family::A2even:
      if (i == 0 && j == 0) {
        WedgeVector out = build_tilde(0, 0);
        WedgeVector t = rel_base(-n, n);
        t.scale(q2br);
        out -= t;
        return out;
      }
      if (i >= 1 && j == -i) return telescope_pos(i, n);
      if (i <= -1 && j == -i) return telescope_neg(-i, 1);
      return build_tilde(i, j);

    case Family::B1:
      if (i == 0 && j == 0) {
        WedgeVector out = build_tilde(0, 0);
        WedgeVector t = rel_base(-n, n);
        t.scale(q2br);
        out -= t;
        return out;
      }
      if (i == -1 && j == 1) {
        WedgeVector out = build_tilde(-1, 1);
        WedgeVector t = zz_shift(rel_base(2, -2), -1);
        t.scale(RatQ::q(2));
        out -= t;
        return out;
      }
      if (i >= 1 && j == -i) return telescope_pos(i, n);
      if (i <= -2 && j == -i) return telescope_neg(-i, 2);
      return build_tilde(i, j);

    case Family::A2odd:
      if (i == -1 && j == 1) {
        WedgeVector out = build_tilde(-1, 1);
        WedgeVector t = zz_shift(rel_base(2, -2), -1);
        t.scale(RatQ::q(1));
        out -= t;
        return out;
      }
      if (i >= 1 && j == -i) return telescope_pos(i, n);
      if (i <= -2 && j == -i) return telescope_neg(-i, 2);
      return build_tilde(i, j);

    case Family::D1:
      if (i == -1 && j == 1) {
        WedgeVector out = build_tilde(-1, 1);
        WedgeVector t = zz_shift(rel_base(2, -2), -1);
        t.scale(RatQ::q(1));
        out -= t;
        return out;
      }
      if (i == n && j == -n) {
        WedgeVector out = build_tilde(n, -n);
        WedgeVector t = rel_base(1 - n, n - 1);
        t.scale(RatQ::q(1));
        out -= t;
        return out;
      }
      if (i >= 1 && i <= n - 1 && j == -i) return telescope_pos(i, n - 1);
      if (i <= -2 && j == -i) return telescope_neg(-i, 2);
      return build_tilde(i, j);

    case Family::D2:
      if (i == 0 && j == 0) {
        WedgeVector out = build_tilde(0, 0);
        WedgeVector t = rel_base(-n, n);
        t.scale(q2br);
        out -= t;
        return out;
      }
      if (i == kPhi && j == kPhi) {
        WedgeVector out = build_tilde(kPhi, kPhi);
        WedgeVector t = zz_shift(rel_base(1, -1), -1);
        t.scale(q2br);
        out -= t;
        return out;
      }
      if (i != kPhi && j != kPhi) {
        if (i >= 1 && j == -i) return telescope_pos(i, n);
        if (i <= -1 && j == -i) return telescope_neg(-i, 1);
      }
      return build_tilde(i, j);

    default:
      throw std::logic_error("combined_base: family has a direct table");
  }
}

const WedgeVector& WedgeSpace::rel_normalized(int l1, int l2, long dz) const {
  const auto key = std::make_tuple(l1, l2, dz);
  if (auto it = general_.find(key); it != general_.end()) return it->second;

  const long h = crystal_.energy(CrystalElem{l1, 0}, CrystalElem{l2, dz});
  WedgeVector out(2);
  if (h == 0) {
    // dz = -H(l1,l2): solve the base relation for its leading word.
    const WedgeVector& base = rel_base(l1, l2);
    const Word lead = {{l1, 0}, {l2, dz}};
    for (const auto& [w, c] : base.terms) {
      if (w == lead) continue;
      out.add(w, -c);
    }
  } else {
    // h = -c < 0: multiply the energy-0 relation for (b1, z^c b2) by
    // 1 (x) z^{-c} + z^{-c} (x) 1 and re-expand the leftover defect pairs,
    // whose energy is strictly closer to zero.
    const long c = -h;
    const CrystalElem b1{l1, 0}, b2{l2, dz};
    const WedgeVector inner = rel_general(b1, b2.shifted(c));
    out.add({b1.shifted(-c), b2.shifted(c)}, RatQ(-1));
    for (const auto& [w, a] : inner.terms) {
      out.add({w[0].shifted(-c), w[1]}, a);
      const CrystalElem w2 = w[1].shifted(-c);
      if (crystal_.energy(w[0], w2) > 0) {
        out.add({w[0], w2}, a);
      } else {
        WedgeVector sub = rel_general(w[0], w2);
        sub.scale(a);
        out += sub;
      }
    }
  }
  out.normal = true;
  return general_.emplace(key, std::move(out)).first->second;
}

WedgeVector WedgeSpace::rel_general(const CrystalElem& b1, const CrystalElem& b2) const {
  if (crystal_.energy(b1, b2) > 0)
    throw std::invalid_argument("rel_general: pair is already normally ordered");
  const WedgeVector& norm = rel_normalized(b1.letter, b2.letter, b2.zpow - b1.zpow);
  if (b1.zpow == 0) return norm;
  return zz_shift(norm, b1.zpow);
}

bool WedgeSpace::normal_word(const Word& w) const {
  for (std::size_t r = 1; r < w.size(); ++r)
    if (crystal_.energy(w[r - 1], w[r]) <= 0) return false;
  return true;
}

WedgeVector WedgeSpace::straighten(const WedgeVector& v) const {
  WedgeVector out(v.arity);
  std::map<Word, RatQ> pending = v.terms;
  long budget = 5'000'000;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word w = std::move(node.key());
    const RatQ c = std::move(node.mapped());
    if (c.is_zero()) continue;
    std::size_t pos = w.size();
    for (std::size_t r = w.size(); r-- > 1;) {
      if (crystal_.energy(w[r - 1], w[r]) <= 0) {
        pos = r - 1;
        break;
      }
    }
    if (pos == w.size()) {
      out.add(w, c);
      continue;
    }
    if (--budget < 0) throw std::logic_error("straighten: rewrite budget exceeded");
    const WedgeVector rw = rel_general(w[pos], w[pos + 1]);
    for (const auto& [pair, a] : rw.terms) {
      Word nw = w;
      nw[pos] = pair[0];
      nw[pos + 1] = pair[1];
      RatQ& slot = pending[nw];
      slot += c * a;
      if (slot.is_zero()) pending.erase(nw);
    }
  }
  out.normal = true;
  return out;
}

WedgeVector WedgeSpace::tensor_act(const Gen& g, const WedgeVector& v) const {
  WedgeVector out(v.arity);
  const long di = g.kind == Gen::Kind::kZ ? 1 : type().d(g.color);
  for (const auto& [w, c] : v.terms) {
    switch (g.kind) {
      case Gen::Kind::kZ: {
        Word nw = w;
        for (auto& b : nw) b = b.shifted(g.shift);
        out.add(nw, c);
        break;
      }
      case Gen::Kind::kT:
      case Gen::Kind::kTinv: {
        long pairing = 0;
        for (const auto& b : w) pairing += crystal_.weight(b).pair_h(g.color);
        const long sgn = g.kind == Gen::Kind::kT ? 1 : -1;
        out.add(w, c * RatQ::q(sgn * di * pairing));
        break;
      }
      case Gen::Kind::kE: {
        RatQ prefix(1);
        for (std::size_t k = 0; k < w.size(); ++k) {
          if (auto eb = crystal_.e(g.color, w[k])) {
            Word nw = w;
            nw[k] = *eb;
            out.add(nw, c * prefix * qint(crystal_.phi(g.color, w[k].letter) + 1, di));
          }
          prefix *= RatQ::q(-di * crystal_.weight(w[k]).pair_h(g.color));
        }
        break;
      }
      case Gen::Kind::kF: {
        std::vector<RatQ> suffix(w.size() + 1, RatQ(1));
        for (std::size_t k = w.size(); k-- > 0;)
          suffix[k] = suffix[k + 1] * RatQ::q(di * crystal_.weight(w[k]).pair_h(g.color));
        for (std::size_t k = 0; k < w.size(); ++k) {
          if (auto fb = crystal_.f(g.color, w[k])) {
            Word nw = w;
            nw[k] = *fb;
            out.add(nw, c * suffix[k + 1] * qint(crystal_.eps(g.color, w[k].letter) + 1, di));
          }
        }
        break;
      }
    }
  }
  return out;
}

WedgeVector WedgeSpace::tensor_act_divided(const Gen& g, long s, const WedgeVector& v) const {
  if (g.kind != Gen::Kind::kE && g.kind != Gen::Kind::kF)
    throw std::invalid_argument("tensor_act_divided: divided powers need e or f");
  WedgeVector out = v;
  for (long r = 0; r < s; ++r) out = tensor_act(g, out);
  out.scale(qfact(s, type().d(g.color)).inverse());
  return out;
}

WedgeVector WedgeSpace::act(const Gen& g, const WedgeVector& v) const {
  return straighten(tensor_act(g, v));
}

WedgeVector WedgeSpace::mul(const WedgeVector& a, const WedgeVector& b) const {
  WedgeVector out(a.arity + b.arity);
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return straighten(out);
}

WedgeVector WedgeSpace::tensor_sym_act(const SymPoly& f, const WedgeVector& v) const {
  if (f.arity != v.arity) throw std::invalid_argument("tensor_sym_act: arity mismatch");
  if (!f.symmetric())
    throw std::invalid_argument("tensor_sym_act: polynomial is not symmetric");
  WedgeVector out(v.arity);
  for (const auto& [expo, mc] : f.monomials) {
    for (const auto& [w, c] : v.terms) {
      Word nw = w;
      for (std::size_t k = 0; k < nw.size(); ++k) nw[k] = nw[k].shifted(expo[k]);
      out.add(nw, c * mc);
    }
  }
  return out;
}

WedgeVector WedgeSpace::symfun_act(const SymPoly& f, const WedgeVector& v) const {
  return straighten(tensor_sym_act(f, v));
}

Weight WedgeSpace::word_weight(const Word& w) const {
  Weight total = type().zero_weight();
  for (const auto& b : w) total += crystal_.weight(b);
  return total;
}

Membership WedgeSpace::verify_rel_in_N(int i, int j, long window) const {
  return verify_in_N(rel_base(i, j), window);
}

Membership WedgeSpace::verify_in_N(const WedgeVector& v, long window) const {
  if (v.empty()) return Membership::kYes;
  if (v.arity != 2) throw std::invalid_argument("verify_in_N: arity 2 only");

  auto in_window = [&](const WedgeVector& x) {
    for (const auto& [w, c] : x.terms)
      for (const auto& b : w)
        if (b.zpow > window || b.zpow < -window) return false;
    return true;
  };
  if (!in_window(v)) return Membership::kInconclusive;

  const CrystalElem u{extremal_letter_, 0};
  const Weight base = word_weight({u, u});
  const int nodes = type().nodes();

  // Weight-lattice obstruction per homogeneous component: the offset from
  // wt(u (x) u) must be an integral combination of the simple roots.
  std::map<std::string, Weight> slices;
  for (const auto& [w, c] : v.terms) {
    Weight mu = word_weight(w);
    slices.try_emplace(mu.str(), std::move(mu));
  }
  for (const auto& [key, mu] : slices) {
    const Weight diff = mu - base;
    std::vector<std::vector<RatQ>> m(static_cast<std::size_t>(nodes) + 1,
                                     std::vector<RatQ>(static_cast<std::size_t>(nodes)));
    std::vector<RatQ> rhs(static_cast<std::size_t>(nodes) + 1);
    for (int col = 0; col < nodes; ++col) {
      const Weight aj = type().alpha(col);
      for (int row = 0; row < nodes; ++row)
        m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
            RatQ(Rational(aj.lambda(row)));
      m[static_cast<std::size_t>(nodes)][static_cast<std::size_t>(col)] = RatQ(aj.delta());
    }
    for (int row = 0; row < nodes; ++row)
      rhs[static_cast<std::size_t>(row)] = RatQ(Rational(diff.lambda(row)));
    rhs[static_cast<std::size_t>(nodes)] = RatQ(diff.delta());
    const auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) return Membership::kNo;
    for (const auto& c : *sol)
      if (!is_integer_constant(c)) return Membership::kNo;
  }

  // Window-bounded span search from u (x) u under e_i, f_i, (z (x) z)^{+-1}
  // and z (x) 1 + 1 (x) z.
  std::vector<Gen> gens;
  for (int i = 0; i < nodes; ++i) {
    gens.push_back(Gen::E(i));
    gens.push_back(Gen::F(i));
  }
  gens.push_back(Gen::Z(1));
  gens.push_back(Gen::Z(-1));
  const SymPoly p1 = power_sum(2, 1);

  std::map<Word, long> coords;
  auto vectorize = [&](const WedgeVector& x) {
    SparseVec sv;
    for (const auto& [w, c] : x.terms) {
      auto [it, inserted] = coords.try_emplace(w, static_cast<long>(coords.size()));
      sv[it->second] = c;
    }
    return sv;
  };

  const SparseVec target = vectorize(v);
  SpanBasis span;
  std::vector<WedgeVector> frontier;
  WedgeVector seed = WedgeVector::monomial({u, u});
  span.insert(vectorize(seed));
  if (span.contains(target)) return Membership::kYes;
  frontier.push_back(std::move(seed));

  while (!frontier.empty()) {
    std::vector<WedgeVector> next;
    for (const auto& x : frontier) {
      std::vector<WedgeVector> images;
      images.reserve(gens.size() + 1);
      for (const auto& g : gens) images.push_back(tensor_act(g, x));
      images.push_back(tensor_sym_act(p1, x));
      for (auto& y : images) {
        if (y.empty() || !in_window(y)) continue;
        if (!span.insert(vectorize(y))) continue;
        if (span.contains(target)) return Membership::kYes;
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return Membership::kInconclusive;
}

}  // namespace qfock
