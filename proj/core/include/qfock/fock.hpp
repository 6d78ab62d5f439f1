#pragma once

#include <qfock/wedge.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qfock {

// Vector in the charge-`base` Fock space.  Each key is the explicit prefix
// (u_base, ..., u_{base+r-1}) of a semi-infinite wedge whose remaining
// factors are the ground-state letters from slot base+r on; the empty word
// is the vacuum |base>.  Canonical vectors (everything FockSpace returns)
// have every prefix normally ordered including the junction into the tail,
// and a last letter differing from the ground letter at its slot.
struct FockVector {
  long base = 0;
  std::map<Word, RatQ> terms;

  explicit FockVector(long m = 0) : base(m) {}
  void add(const Word& w, const RatQ& c);
  RatQ coeff(const Word& w) const;
  bool empty() const { return terms.empty(); }
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  void scale(const RatQ& c);
  bool operator==(const FockVector& o) const {
    return base == o.base && terms == o.terms;
  }
  std::string str() const;
};

// The q-deformed Fock spaces F_m of one affinized perfect crystal and
// ground-state branch kappa: semi-infinite wedges with ground tail, the
// U_q(g) action, and the boson algebra B_n with its commutator scalars
// gamma_n.  Tail fixed points (f_i and B_{n<0} on vacua) are memoized per
// slot residue; instances are not safe for concurrent use.
class FockSpace {
 public:
  FockSpace(Crystal crystal, int kappa);

  const Crystal& crystal() const { return wedge_.crystal(); }
  const WedgeSpace& wedge() const { return wedge_; }
  int kappa() const { return kappa_; }

  // Ground letter b_k and weight lambda_k of the tail at slot k.
  CrystalElem ground(long k) const { return crystal().ground(kappa_, k); }
  Weight lambda(long k) const { return crystal().ground_weight(kappa_, k); }

  FockVector vacuum(long m) const;
  // Weight of one term: the letters of w plus lambda_{base+|w|}.
  Weight term_weight(long base, const Word& w) const;
  // Common weight of all terms; throws std::invalid_argument when mixed.
  Weight weight(const FockVector& v) const;

  // Canonical form: straighten every prefix, drop terms whose junction into
  // the tail has energy <= 0, and absorb trailing ground letters.
  FockVector canonical(long base, const std::map<Word, RatQ>& terms) const;

  // v /\ f for an arity-r wedge v; the result lives in charge f.base - r.
  FockVector wedge_front(const WedgeVector& v, const FockVector& f) const;

  // Chevalley / torus action (g.kind in {kE, kF, kT, kTinv}).
  FockVector act(const Gen& g, const FockVector& f) const;
  // Divided power g^(s) = g^s / [s]_i! (g must be e or f).
  FockVector act_divided(const Gen& g, long s, const FockVector& f) const;
  // Boson B_n (n != 0): z^n summed over all slots.
  FockVector boson(long n, const FockVector& f) const;

  RatQ vacuum_coeff(const FockVector& f) const { return f.coeff({}); }
  // Commutator scalar: [B_n, B_{-n}] = gamma_n (n >= 1), computed from
  // B_n B_{-n}|0>; throws std::logic_error if that is not a vacuum multiple.
  RatQ gamma(long n) const;
  // [B_n, B_n'] f == delta_{n+n',0} (sign n) gamma_|n| f, checked exactly.
  bool commutator_check(long n1, long n2, const FockVector& f) const;

  // Trimmed sequences at `base` whose junctions, including into the ground
  // tail, all have energy exactly 1: the highest-weight-module part of the
  // factorization of normal sequences.  Length in [1, len_cap].
  std::vector<Word> path_words(long base, int len_cap) const;
  // All canonical prefixes at `base` of weight mu, enumerated through the
  // factorization (energy-1 path) x (weakly decreasing z-shift) with the
  // path length capped at len_cap.  Completeness holds once len_cap covers
  // the finitely many contributing paths; the character tests pin the cap.
  std::vector<Word> weight_words(long base, const Weight& mu, int len_cap) const;
  // Same enumeration for every weight of delta-defect <= depth, keyed by
  // lambda_base - weight; verifies that each word factors uniquely.
  std::map<Weight, std::vector<Word>> character_table(long base, long depth,
                                                      int len_cap) const;

 private:
  FockVector act_vacuum_f(int i, long s) const;
  FockVector boson_vacuum(long n, long s) const;
  // Solves x = c + psi(x), psi(x) = ground prefix /\ period shift of x.
  FockVector solve_tail(long s, const FockVector& c) const;

  WedgeSpace wedge_;
  int kappa_ = 0;
  mutable std::map<std::pair<int, long>, FockVector> fvac_cache_;
  mutable std::map<std::pair<long, long>, FockVector> boson_cache_;
};

}  // namespace qfock
