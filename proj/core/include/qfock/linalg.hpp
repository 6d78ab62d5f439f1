#pragma once

#include <qfock/ratq.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace qfock {

// Sparse vector over Q(q), indexed by interned coordinates.
using SparseVec = std::map<long, RatQ>;

// Incrementally maintained echelon basis over Q(q).  Every row is normalized
// to leading coefficient 1 at its pivot (the row's smallest coordinate), and
// pivots are unique, so membership is a single reduction sweep.
class SpanBasis {
 public:
  // Residual of v after eliminating every pivot coordinate.
  SparseVec reduce(SparseVec v) const;
  // Adds v to the span; returns false when v was already contained.
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t dim() const { return rows_.size(); }

 private:
  std::map<long, SparseVec> rows_;
};

// Solves a x = b by Gauss-Jordan elimination; nullopt when the system is
// inconsistent or the solution is not unique.
std::optional<std::vector<RatQ>> solve_linear(std::vector<std::vector<RatQ>> a,
                                              std::vector<RatQ> b);

}  // namespace qfock
