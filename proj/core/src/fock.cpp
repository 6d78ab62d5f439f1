#include <qfock/fock.hpp>

#include <qfock/qint.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qfock {

namespace {

constexpr std::size_t kClosureCap = 20000;

// Partitions of s into weakly decreasing parts >= 1, largest part <= cap.
void partitions_into(long s, long cap, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out) {
  if (s == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = std::min(s, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(s - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long>> partitions(long s) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  if (s >= 0) partitions_into(s, s, cur, out);
  return out;
}

}  // namespace

void FockVector::add(const Word& w, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

RatQ FockVector::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? RatQ() : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (base != o.base)
    throw std::invalid_argument("FockVector: charge mismatch");
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (base != o.base)
    throw std::invalid_argument("FockVector: charge mismatch");
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

void FockVector::scale(const RatQ& c) {
  if (c.is_zero()) {
    terms.clear();
    return;
  }
  for (auto& [w, v] : terms) v *= c;
}

std::string FockVector::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") ";
    if (!w.empty()) os << word_str(w) << " /\\ ";
    os << "|" << base + static_cast<long>(w.size()) << ">";
  }
  return os.str();
}

FockSpace::FockSpace(Crystal crystal, int kappa)
    : wedge_(std::move(crystal)), kappa_(kappa) {
  if (kappa < 0 || kappa >= this->crystal().branches())
    throw std::invalid_argument("FockSpace: no such ground-state branch");
}

FockVector FockSpace::vacuum(long m) const {
  FockVector v(m);
  v.add({}, RatQ(1));
  return v;
}

Weight FockSpace::term_weight(long base, const Word& w) const {
  Weight acc = lambda(base + static_cast<long>(w.size()));
  for (const CrystalElem& b : w) acc += crystal().weight(b);
  return acc;
}

Weight FockSpace::weight(const FockVector& v) const {
  if (v.empty()) throw std::invalid_argument("weight: zero vector");
  Weight first = term_weight(v.base, v.terms.begin()->first);
  for (const auto& [w, c] : v.terms)
    if (term_weight(v.base, w) != first)
      throw std::invalid_argument("weight: mixed-weight vector");
  return first;
}

FockVector FockSpace::canonical(long base,
                                const std::map<Word, RatQ>& terms) const {
  FockVector out(base);
  // Straighten per arity, so cross terms of equal length can cancel early.
  std::map<std::size_t, WedgeVector> batch;
  for (const auto& [w, c] : terms) {
    if (c.is_zero()) continue;
    if (w.empty()) {
      out.add({}, c);
      continue;
    }
    auto [it, inserted] =
        batch.emplace(w.size(), WedgeVector(static_cast<int>(w.size())));
    it->second.add(w, c);
  }
  for (auto& [len, v] : batch) {
    const WedgeVector norm = wedge_.straighten(v);
    const long end = base + static_cast<long>(len);
    for (const auto& [w, c] : norm.terms) {
      // A junction of energy <= 0 into the ground tail kills the term.
      if (crystal().energy(w.back(), ground(end)) <= 0) continue;
      Word t = w;
      while (!t.empty() &&
             t.back() == ground(base + static_cast<long>(t.size()) - 1))
        t.pop_back();
      out.add(t, c);
    }
  }
  return out;
}

FockVector FockSpace::wedge_front(const WedgeVector& v,
                                  const FockVector& f) const {
  const long out_base = f.base - v.arity;
  std::map<Word, RatQ> pending;
  for (const auto& [vw, vc] : v.terms) {
    for (const auto& [fw, fc] : f.terms) {
      Word w = vw;
      w.insert(w.end(), fw.begin(), fw.end());
      auto [it, inserted] = pending.emplace(std::move(w), vc * fc);
      if (!inserted) it->second += vc * fc;
    }
  }
  return canonical(out_base, pending);
}

FockVector FockSpace::act(const Gen& g, const FockVector& f) const {
  const long d = crystal().type().d(g.color);
  FockVector out(f.base);
  switch (g.kind) {
    case Gen::Kind::kT:
    case Gen::Kind::kTinv: {
      const long sign = g.kind == Gen::Kind::kT ? 1 : -1;
      for (const auto& [w, c] : f.terms) {
        const long h = term_weight(f.base, w).pair_h(g.color);
        out.add(w, c * RatQ::q(sign * d * h));
      }
      return out;
    }
    case Gen::Kind::kE:
    case Gen::Kind::kF:
      break;
    case Gen::Kind::kZ:
      throw std::invalid_argument("act: z does not act on the Fock space");
  }

  std::map<std::size_t, WedgeVector> batch;
  for (const auto& [w, c] : f.terms) {
    if (w.empty()) continue;
    auto [it, inserted] =
        batch.emplace(w.size(), WedgeVector(static_cast<int>(w.size())));
    it->second.add(w, c);
  }
  for (auto& [len, v] : batch) {
    WedgeVector moved = wedge_.tensor_act(g, v);
    if (g.kind == Gen::Kind::kF) {
      // f_i places t_i on the untouched ground tail at slot base + len.
      const long h = lambda(f.base + static_cast<long>(len)).pair_h(g.color);
      moved.scale(RatQ::q(d * h));
    }
    out += canonical(f.base, moved.terms);
  }

  if (g.kind == Gen::Kind::kF) {
    // The remaining coproduct terms hit the tail itself.
    std::map<Word, RatQ> pending;
    for (const auto& [w, c] : f.terms) {
      const FockVector tail =
          act_vacuum_f(g.color, f.base + static_cast<long>(w.size()));
      for (const auto& [tw, tc] : tail.terms) {
        Word full = w;
        full.insert(full.end(), tw.begin(), tw.end());
        auto [it, inserted] = pending.emplace(std::move(full), c * tc);
        if (!inserted) it->second += c * tc;
      }
    }
    out += canonical(f.base, pending);
  }
  return out;
}

FockVector FockSpace::act_divided(const Gen& g, long s,
                                  const FockVector& f) const {
  if (g.kind != Gen::Kind::kE && g.kind != Gen::Kind::kF)
    throw std::invalid_argument("act_divided: generator must be e_i or f_i");
  if (s < 0) throw std::invalid_argument("act_divided: negative power");
  FockVector out = f;
  for (long r = 0; r < s; ++r) out = act(g, out);
  out.scale(qfact(s, crystal().type().d(g.color)).inverse());
  return out;
}

FockVector FockSpace::boson(long n, const FockVector& f) const {
  if (n == 0) throw std::invalid_argument("boson: n must be nonzero");
  FockVector out(f.base);
  std::map<std::size_t, WedgeVector> batch;
  for (const auto& [w, c] : f.terms) {
    if (w.empty()) continue;
    auto [it, inserted] =
        batch.emplace(w.size(), WedgeVector(static_cast<int>(w.size())));
    it->second.add(w, c);
  }
  for (auto& [len, v] : batch) {
    const WedgeVector moved =
        wedge_.tensor_sym_act(power_sum(static_cast<int>(len), n), v);
    out += canonical(f.base, moved.terms);
  }
  if (n < 0) {
    // B_n with n > 0 annihilates every ground tail; n < 0 does not.
    std::map<Word, RatQ> pending;
    for (const auto& [w, c] : f.terms) {
      const FockVector tail =
          boson_vacuum(n, f.base + static_cast<long>(w.size()));
      for (const auto& [tw, tc] : tail.terms) {
        Word full = w;
        full.insert(full.end(), tw.begin(), tw.end());
        auto [it, inserted] = pending.emplace(std::move(full), c * tc);
        if (!inserted) it->second += c * tc;
      }
    }
    out += canonical(f.base, pending);
  }
  return out;
}

RatQ FockSpace::gamma(long n) const {
  if (n < 1) throw std::invalid_argument("gamma: n must be positive");
  const FockVector x = boson(n, boson(-n, vacuum(0)));
  const RatQ g = vacuum_coeff(x);
  FockVector rest = x;
  rest.add({}, -g);
  if (!rest.empty())
    throw std::logic_error("gamma: B_n B_{-n}|0> is not a vacuum multiple");
  return g;
}

bool FockSpace::commutator_check(long n1, long n2, const FockVector& f) const {
  FockVector lhs = boson(n1, boson(n2, f));
  lhs -= boson(n2, boson(n1, f));
  FockVector rhs(f.base);
  if (n1 + n2 == 0 && n1 != 0) {
    rhs = f;
    RatQ g = gamma(std::abs(n1));
    if (n1 < 0) g = -g;
    rhs.scale(g);
  }
  return lhs == rhs;
}

FockVector FockSpace::act_vacuum_f(int i, long s) const {
  const auto key = std::make_pair(i, s);
  auto hit = fvac_cache_.find(key);
  if (hit != fvac_cache_.end()) return hit->second;

  const long d = crystal().type().d(i);
  const int period = crystal().period(kappa_);
  FockVector c(s);
  Word prefix;
  for (int k = 0; k < period; ++k) {
    const CrystalElem b = ground(s + k);
    if (const auto fb = crystal().f(i, b)) {
      const RatQ scal = RatQ::q(d * lambda(s + k + 1).pair_h(i)) *
                        qint(1 + crystal().eps(i, b.letter), d);
      Word w = prefix;
      w.push_back(*fb);
      c += canonical(s, {{std::move(w), scal}});
    }
    prefix.push_back(b);
  }
  FockVector x = c.empty() ? FockVector(s) : solve_tail(s, c);
  fvac_cache_.emplace(key, x);
  return x;
}

FockVector FockSpace::boson_vacuum(long n, long s) const {
  const auto key = std::make_pair(n, s);
  auto hit = boson_cache_.find(key);
  if (hit != boson_cache_.end()) return hit->second;

  const int period = crystal().period(kappa_);
  FockVector c(s);
  Word prefix;
  for (int k = 0; k < period; ++k) {
    const CrystalElem b = ground(s + k);
    Word w = prefix;
    w.push_back(b.shifted(n));
    c += canonical(s, {{std::move(w), RatQ(1)}});
    prefix.push_back(b);
  }
  FockVector x = c.empty() ? FockVector(s) : solve_tail(s, c);
  boson_cache_.emplace(key, x);
  return x;
}

FockVector FockSpace::solve_tail(long s, const FockVector& c) const {
  const int period = crystal().period(kappa_);
  const long zshift = crystal().period_shift(kappa_);
  Word prefix;
  for (int k = 0; k < period; ++k) prefix.push_back(ground(s + k));

  // psi maps the tail unknown one period to the right, under the ground
  // prefix; the unknown is the fixed point of x = c + psi(x).
  const auto psi = [&](const Word& w) {
    Word full = prefix;
    for (const CrystalElem& b : w) full.push_back(b.shifted(zshift));
    return canonical(s, {{std::move(full), RatQ(1)}});
  };

  std::vector<Word> basis;
  std::map<Word, std::size_t> index;
  std::vector<FockVector> image;
  std::vector<Word> queue;
  for (const auto& [w, cc] : c.terms) queue.push_back(w);
  while (!queue.empty()) {
    Word w = std::move(queue.back());
    queue.pop_back();
    if (index.contains(w)) continue;
    index.emplace(w, basis.size());
    basis.push_back(w);
    image.push_back(psi(basis.back()));
    for (const auto& [iw, ic] : image.back().terms) queue.push_back(iw);
    if (basis.size() > kClosureCap)
      throw std::logic_error("solve_tail: support closure does not stabilize");
  }

  const std::size_t n = basis.size();
  std::vector<std::vector<RatQ>> a(n, std::vector<RatQ>(n));
  std::vector<RatQ> rhs(n);
  for (std::size_t col = 0; col < n; ++col) {
    a[col][col] += RatQ(1);
    for (const auto& [iw, ic] : image[col].terms) a[index.at(iw)][col] -= ic;
  }
  for (std::size_t row = 0; row < n; ++row) rhs[row] = c.coeff(basis[row]);

  const auto sol = solve_linear(std::move(a), std::move(rhs));
  if (!sol) throw std::logic_error("solve_tail: fixed point system singular");
  FockVector x(s);
  for (std::size_t col = 0; col < n; ++col) x.add(basis[col], (*sol)[col]);
  return x;
}

std::vector<Word> FockSpace::path_words(long base, int len_cap) const {
  // Paths of length r occupy slots base..base+r-1 with every junction,
  // including into the ground tail, of energy exactly 1; given the letter
  // to the right the z-power of each slot is forced.  Slots never carry the
  // ground letter: a ground letter forces a ground suffix, which trimming
  // removes.  Built rightmost slot first.
  std::vector<Word> out;
  for (int r = 1; r <= len_cap; ++r) {
    Word rev;  // letters for slots slot+1..base+r-1, rightmost first
    const auto grow = [&](auto&& self, long slot) -> void {
      const CrystalElem target = rev.empty() ? ground(base + r) : rev.back();
      for (int letter : wedge_.letters()) {
        const long e0 = crystal().energy(CrystalElem{letter, 0}, target);
        const CrystalElem cand{letter, e0 - 1};
        if (cand == ground(slot)) continue;
        rev.push_back(cand);
        if (slot == base)
          out.emplace_back(rev.rbegin(), rev.rend());
        else
          self(self, slot - 1);
        rev.pop_back();
      }
    };
    grow(grow, base + r - 1);
  }
  return out;
}

std::vector<Word> FockSpace::weight_words(long base, const Weight& mu,
                                          int len_cap) const {
  // The classical part of mu is decided by the path, the delta defect by
  // the weakly decreasing z-shift.
  std::vector<Word> out;
  std::vector<Word> paths = path_words(base, len_cap);
  paths.push_back({});
  std::set<Word> seen;
  for (const Word& p : paths) {
    const Weight pw = term_weight(base, p);
    if (pw.cl() != mu.cl()) continue;
    const Rational gap = pw.delta() - mu.delta();
    if (gap.get_den() != 1 || gap < 0) continue;
    for (const auto& part : partitions(gap.get_num().get_si())) {
      const std::size_t len = std::max(p.size(), part.size());
      Word w;
      for (std::size_t j = 0; j < len; ++j) {
        CrystalElem b =
            j < p.size() ? p[j] : ground(base + static_cast<long>(j));
        if (j < part.size()) b = b.shifted(-part[j]);
        w.push_back(b);
      }
      while (!w.empty() &&
             w.back() == ground(base + static_cast<long>(w.size()) - 1))
        w.pop_back();
      if (!seen.insert(w).second)
        throw std::logic_error("weight_words: factorization not unique");
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Weight, std::vector<Word>> FockSpace::character_table(
    long base, long depth, int len_cap) const {
  std::map<Weight, std::vector<Word>> table;
  std::set<Word> seen;
  std::vector<Word> paths = path_words(base, len_cap);
  paths.push_back({});
  const Weight origin = lambda(base);
  for (const Word& p : paths) {
    const Weight pw = term_weight(base, p);
    const Rational pdef = origin.delta() - pw.delta();
    if (pdef.get_den() != 1) continue;
    const long budget = depth - pdef.get_num().get_si();
    for (long s = 0; s <= budget; ++s) {
      for (const auto& part : partitions(s)) {
        const std::size_t len = std::max(p.size(), part.size());
        Word w;
        for (std::size_t j = 0; j < len; ++j) {
          CrystalElem b =
              j < p.size() ? p[j] : ground(base + static_cast<long>(j));
          if (j < part.size()) b = b.shifted(-part[j]);
          w.push_back(b);
        }
        while (!w.empty() &&
               w.back() == ground(base + static_cast<long>(w.size()) - 1))
          w.pop_back();
        if (!seen.insert(w).second)
          throw std::logic_error("character_table: factorization not unique");
        table[origin - term_weight(base, w)].push_back(w);
      }
    }
  }
  return table;
}

}  // namespace qfock
