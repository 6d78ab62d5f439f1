#pragma once

#include <qfock/crystal.hpp>
#include <qfock/ratq.hpp>

#include <map>
#include <string>

namespace qfock {

// Finite Q(q)-combination of the global base vectors G(z^m b_j) of V_aff.
struct VaffVector {
  std::map<CrystalElem, RatQ> terms;

  static VaffVector unit(const CrystalElem& b, const RatQ& c = RatQ(1));
  void add(const CrystalElem& b, const RatQ& c);
  RatQ coeff(const CrystalElem& b) const;
  bool empty() const { return terms.empty(); }
  VaffVector& operator+=(const VaffVector& o);
  VaffVector& operator-=(const VaffVector& o);
  void scale(const RatQ& c);
  bool operator==(const VaffVector& o) const { return terms == o.terms; }
  std::string str() const;
};

// Generator acting on V_aff or diagonally on words: Chevalley e_i / f_i,
// the torus t_i^{+-1}, or the shift b -> z^shift b of every tensor factor.
struct Gen {
  enum class Kind { kE, kF, kT, kTinv, kZ };
  Kind kind = Kind::kE;
  int color = 0;
  long shift = 0;

  static Gen E(int i) { return {Kind::kE, i, 0}; }
  static Gen F(int i) { return {Kind::kF, i, 0}; }
  static Gen T(int i) { return {Kind::kT, i, 0}; }
  static Gen Tinv(int i) { return {Kind::kTinv, i, 0}; }
  static Gen Z(long s) { return {Kind::kZ, 0, s}; }

  std::string str() const;
};

// Action on the global base:
//   e_i G(b) = [phi_i(b) + 1]_i G(e~_i b),   f_i G(b) = [eps_i(b) + 1]_i G(f~_i b),
//   t_i G(b) = q_i^{<h_i, wt b>} G(b),       z^s G(z^m b_j) = G(z^{m+s} b_j),
// with [n]_i the q-integer in q_i = q^{d_i} and absent arrows giving zero.
VaffVector vaff_act(const Crystal& crystal, const Gen& g, const VaffVector& v);

}  // namespace qfock
