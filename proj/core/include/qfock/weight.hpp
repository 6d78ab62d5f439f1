#pragma once

#include <qfock/poly.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace qfock {

// Affine weight written in the basis (Lambda_0, ..., Lambda_n, delta):
// integer coefficients on the fundamental weights, rational coefficient on
// delta.  Pairing with h_i reads off the i-th Lambda coefficient; delta
// pairs to zero with every h_i.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::size_t nodes) : lam_(nodes, 0) {}
  Weight(std::vector<long> lam, Rational delta)
      : lam_(std::move(lam)), delta_(std::move(delta)) {}

  std::size_t nodes() const { return lam_.size(); }
  long lambda(int i) const { return lam_.at(static_cast<std::size_t>(i)); }
  long& lambda(int i) { return lam_.at(static_cast<std::size_t>(i)); }
  const Rational& delta() const { return delta_; }
  Rational& delta() { return delta_; }

  // <h_i, .>
  long pair_h(int i) const { return lambda(i); }
  // Forget the delta coefficient (classical projection).
  Weight cl() const { return Weight(lam_, 0); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(long s, Weight w);
  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const {
    if (lam_ != o.lam_) return lam_ < o.lam_;
    return cmp(delta_, o.delta_) < 0;
  }

  std::string str() const;

private:
  std::vector<long> lam_;
  Rational delta_ = 0;
};

}  // namespace qfock
