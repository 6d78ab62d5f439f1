#pragma once

#include <qfock/crystal.hpp>
#include <qfock/linalg.hpp>
#include <qfock/vaff.hpp>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qfock {

// A pure tensor of B_aff letters, leftmost factor first.
using Word = std::vector<CrystalElem>;

std::string word_str(const Word& w);

// Finite Q(q)-combination of arity-r words.  The same container carries
// tensor expressions (intermediate) and wedge normal forms; `normal` is set
// by WedgeSpace::straighten and cleared by any mutation.
struct WedgeVector {
  int arity = 0;
  bool normal = false;
  std::map<Word, RatQ> terms;

  explicit WedgeVector(int r = 0) : arity(r) {}
  static WedgeVector monomial(Word w, const RatQ& c = RatQ(1));
  void add(const Word& w, const RatQ& c);
  RatQ coeff(const Word& w) const;
  bool empty() const { return terms.empty(); }
  WedgeVector& operator+=(const WedgeVector& o);
  WedgeVector& operator-=(const WedgeVector& o);
  void scale(const RatQ& c);
  bool operator==(const WedgeVector& o) const {
    return arity == o.arity && terms == o.terms;
  }
  std::string str() const;
};

// Symmetric Laurent polynomial in arity-many variables, stored monomially
// (exponent vector -> coefficient).
struct SymPoly {
  int arity = 0;
  std::map<std::vector<long>, RatQ> monomials;

  explicit SymPoly(int r) : arity(r) {}
  void add(std::vector<long> expo, const RatQ& c);
  bool symmetric() const;
};

// Power sum p_t = sum_r z_r^t (p_0 = arity * 1).
SymPoly power_sum(int arity, long t);
// Z(t,d) = z^t (x) z^{d-t} + [2t > d] z^{d-t} (x) z^t - [2t < d] z^t (x) z^{d-t};
// zero for 2t < d, the diagonal monomial for 2t = d, symmetrized otherwise.
SymPoly zsym_op(long t, long d);

enum class Membership { kYes, kNo, kInconclusive };

std::string membership_str(Membership m);

// The q-wedge engine of one affinized perfect crystal: the relation tables
// C_{i,j}, the straightening rewriting system on words, and the quantum
// group / symmetric function actions on wedges.  Relation lookups are
// memoized; instances are not safe for concurrent use.
class WedgeSpace {
 public:
  explicit WedgeSpace(Crystal crystal);

  const Crystal& crystal() const { return crystal_; }
  const AffineType& type() const { return crystal_.type(); }

  // Letters J of the classical crystal.
  const std::vector<int>& letters() const { return crystal_.letters(); }
  // The extremal letter u with N generated from u (x) u.
  int extremal_letter() const { return extremal_letter_; }

  // The relation C_{i,j}, identified with C_{b_i (x) z^{-H(i,j)} b_j}:
  // leading word (b_i, z^{-H(i,j)} b_j) with coefficient 1, every other word
  // normally ordered (H > 0) within the straightening l-window, all
  // coefficients Laurent polynomials.
  const WedgeVector& rel_base(int i, int j) const;
  // Rewrite of the defect pair b1 (x) b2 (requires H(b1 (x) b2) <= 0) as a
  // combination of normally ordered pairs; b1 (x) b2 equals the result
  // modulo N.  Throws std::invalid_argument when H > 0.
  WedgeVector rel_general(const CrystalElem& b1, const CrystalElem& b2) const;

  bool normal_word(const Word& w) const;
  // Canonical normal form: rewrites the rightmost defect junction of each
  // word until every word is normally ordered.
  WedgeVector straighten(const WedgeVector& v) const;

  // Iterated coproduct action on words as tensors (no straightening):
  //   e_i -> sum_r t_i^{-1} (x) ... (x) t_i^{-1} (x) e_i|_r (x) 1 (x) ...,
  //   f_i -> sum_r 1 (x) ... (x) 1 (x) f_i|_r (x) t_i (x) ... (x) t_i,
  // t_i acting diagonally and z^s shifting every factor.
  WedgeVector tensor_act(const Gen& g, const WedgeVector& v) const;
  // Divided power g^{(s)} = g^s / [s]_i! of tensor_act (g must be e or f).
  WedgeVector tensor_act_divided(const Gen& g, long s, const WedgeVector& v) const;
  // The U_q(g) action on wedges: tensor_act followed by straighten.
  WedgeVector act(const Gen& g, const WedgeVector& v) const;
  // Wedge product: concatenation followed by straighten.
  WedgeVector mul(const WedgeVector& a, const WedgeVector& b) const;
  // Monomial action of a symmetric Laurent polynomial in z (x) 1 (x) ...,
  // 1 (x) z (x) ..., without straightening; throws std::invalid_argument
  // unless f is symmetric or the arity disagrees.
  WedgeVector tensor_sym_act(const SymPoly& f, const WedgeVector& v) const;
  // The (well-defined) symmetric function action on wedges.
  WedgeVector symfun_act(const SymPoly& f, const WedgeVector& v) const;

  Weight word_weight(const Word& w) const;

  // Span certificate for C_{i,j} within the z-power window: membership in
  // N = U_q(g)[z (x) z, (z (x) z)^{-1}, z (x) 1 + 1 (x) z] (u (x) u).
  Membership verify_rel_in_N(int i, int j, long window) const;
  // Same certificate for an arbitrary arity-2 tensor vector.  kNo is decided
  // by the weight-lattice obstruction; kInconclusive means the window-bounded
  // span did not reach the candidate.
  Membership verify_in_N(const WedgeVector& v, long window) const;

 private:
  WedgeVector build_base(int i, int j) const;
  WedgeVector a1_base(int i, int j) const;
  WedgeVector a1k_base(int i, int j) const;
  WedgeVector combined_base(int i, int j) const;
  WedgeVector build_tilde(int i, int j) const;
  // Rewrite of the normalized defect pair (z-power of the first letter 0).
  const WedgeVector& rel_normalized(int l1, int l2, long dz) const;

  Crystal crystal_;
  int extremal_letter_ = 0;
  mutable std::map<std::pair<int, int>, WedgeVector> base_;
  mutable std::map<std::tuple<int, int, long>, WedgeVector> general_;
};

}  // namespace qfock
