#pragma once

#include <qfock/cartan.hpp>

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qfock {

// Sentinel for the extra letter of the D2 crystal (printed as "phi").
inline constexpr int kPhi = std::numeric_limits<int>::max();

// An element z^m b_j of the affinized crystal B_aff.
struct CrystalElem {
  int letter = 0;
  long zpow = 0;
  auto operator<=>(const CrystalElem&) const = default;
  CrystalElem shifted(long dz) const { return {letter, zpow + dz}; }
};

std::string letter_str(int letter);
std::string elem_str(const CrystalElem& b);

// The level-1 (or level-k for a1k) perfect crystal B of a family together
// with its affinization: Kashiwara operators with the z-power bookkeeping of
// the 0-arrows, the energy function H, the grading l, and the ground-state
// sequences (b°_m, lambda_m).
class Crystal {
public:
  explicit Crystal(AffineType type);

  const AffineType& type() const { return type_; }
  const std::vector<int>& letters() const { return letters_; }
  bool valid_letter(int j) const { return index_.count(j) != 0; }

  // Kashiwara operators on B_aff; nullopt when the arrow is absent.
  // Every 0-colored f-arrow lowers the z-power by one (and e raises it),
  // matching e_i(a (x) v) = z^{delta_{i,0}} a (x) e_i v on the affinization.
  std::optional<CrystalElem> f(int i, CrystalElem b) const;
  std::optional<CrystalElem> e(int i, CrystalElem b) const;
  long eps(int i, int letter) const;
  long phi(int i, int letter) const;
  // eps(b) = sum_i eps_i(b) Lambda_i and likewise phi(b) (classical).
  Weight eps_weight(int letter) const;
  Weight phi_weight(int letter) const;
  // Weight of z^m b_j through the section z^0 B -> P (printed letter weights
  // with delta-coefficient 0) plus m delta.
  Weight weight(CrystalElem b) const;

  // Energy function H(z^a b_i (x) z^b b_j) = H(b_i (x) b_j) - a + b.
  long energy(CrystalElem b1, CrystalElem b2) const;
  int energy_letters(int i, int j) const;
  // The grading l on B_aff; l(z b) = l(b) + h with h = type().coxeter().
  long grade(CrystalElem b) const;

  // Tensor-product crystal structure on words w_1 (x) ... (x) w_r
  // (left-associated; the convention where f acts on the first factor
  // exactly when eps_i(first) >= phi_i(second)).
  long tensor_eps(int i, const std::vector<CrystalElem>& w) const;
  long tensor_phi(int i, const std::vector<CrystalElem>& w) const;
  // Returns the changed position and its new value; nullopt if the operator
  // kills the word.
  std::optional<std::pair<std::size_t, CrystalElem>> tensor_f(
      int i, const std::vector<CrystalElem>& w) const;
  std::optional<std::pair<std::size_t, CrystalElem>> tensor_e(
      int i, const std::vector<CrystalElem>& w) const;

  // Ground-state sequences, branch kappa in [0, branches()).
  int branches() const;
  CrystalElem ground(int kappa, long m) const;
  // lambda_m: classical part phi(b°_m), delta part fixed by
  // lambda_m = wt(b°_m) + lambda_{m+1} with the delta-coefficient of
  // lambda_0 pinned to zero.
  Weight ground_weight(int kappa, long m) const;
  int period(int kappa) const;
  // c with b°_{m+N} = z^c b°_m.
  long period_shift(int kappa) const;

  // Letters b with <c, eps(b)> = level (the domain of the perfectness
  // bijections).
  std::vector<int> minimal_letters() const;

private:
  int idx(int letter) const;
  void add_arrow(int color, int from, int to);
  void build_graph();
  void build_weights();

  AffineType type_;
  std::vector<int> letters_;
  std::map<int, int> index_;
  // arrows[color][letter index] = target letter index or -1
  std::vector<std::vector<int>> f_arrow_, e_arrow_;
  std::vector<std::vector<long>> eps_, phi_;
  std::vector<Weight> wt_;
};

// Perfectness report: eps and phi restrict to bijections from the minimal
// letters onto the dominant classical weights of the crystal's level, and
// B (x) B is connected.
struct PerfectReport {
  int level = 0;
  std::vector<int> minimal;
  bool eps_bijective = false;
  bool phi_bijective = false;
  bool pair_connected = false;
  bool ok() const { return eps_bijective && phi_bijective && pair_connected; }
};

PerfectReport check_perfect(const Crystal& crystal);

}  // namespace qfock
