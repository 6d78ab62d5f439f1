#pragma once

#include <qfock/ratq.hpp>
#include <qfock/weight.hpp>

#include <string>
#include <vector>

namespace qfock {

// The seven supported affine families.  A1k is the rank-1 family at general
// level k; all others are level 1.
enum class Family { A1, A2even, B1, A2odd, D1, D2, A1k };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Affine Cartan datum: index set I = {0,...,n}, Cartan matrix, root lengths,
// marks/comarks, dual Coxeter number, and the (p, xi) pair used by the
// two-point functions.
class AffineType {
public:
  AffineType(Family family, int n, int level = 1);

  Family family() const { return family_; }
  int rank() const { return n_; }
  int level() const { return level_; }
  int nodes() const { return n_ + 1; }
  // True when the rank lies below the smallest rank the source tables are
  // printed for; such types follow the general patterns by extrapolation.
  bool extrapolated() const { return extrapolated_; }

  // <h_i, alpha_j>
  int cartan(int i, int j) const { return a_.at(i).at(j); }
  // (alpha_i, alpha_i)
  int alpha_sq(int i) const { return alpha_sq_.at(i); }
  // q_i = q^{d_i} with d_i = (alpha_i, alpha_i)/2
  int d(int i) const { return alpha_sq_.at(i) / 2; }
  int mark(int i) const { return marks_.at(i); }
  int comark(int i) const { return comarks_.at(i); }
  int dual_coxeter() const { return h_dual_; }
  // The constant h in the grading l (l(z b) = l(b) + h).
  int coxeter() const { return h_; }

  // p = q^{(alpha_0,alpha_0)/(2 a_0^v)}; xi = (-)^{r-1} p^{h^v} for the
  // level-1 families, q^{2n} for D2 and q^2 for A1k.
  int p_exp() const { return p_exp_; }
  int xi_sign() const { return xi_sign_; }
  int xi_exp() const { return xi_exp_; }
  RatQ p() const { return RatQ::q(p_exp_); }
  RatQ xi() const { return RatQ::monomial(xi_sign_, xi_exp_); }

  // <c, lambda> = sum_i a_i^v <h_i, lambda>
  long level_of(const Weight& w) const;

  Weight zero_weight() const { return Weight(static_cast<std::size_t>(nodes())); }
  Weight fundamental(int i) const;
  Weight delta_weight() const;
  // alpha_j = sum_i <h_i, alpha_j> Lambda_i + delta_{j,0} delta
  // (a_0 = 1 for every supported family).
  Weight alpha(int j) const;

  std::string str() const;
  bool operator==(const AffineType& o) const {
    return family_ == o.family_ && n_ == o.n_ && level_ == o.level_;
  }

private:
  Family family_;
  int n_;
  int level_;
  bool extrapolated_ = false;
  std::vector<std::vector<int>> a_;
  std::vector<int> alpha_sq_;
  std::vector<int> marks_;
  std::vector<int> comarks_;
  int h_dual_ = 0;
  int h_ = 0;
  int p_exp_ = 0;
  int xi_sign_ = 1;
  int xi_exp_ = 0;
};

}  // namespace qfock
