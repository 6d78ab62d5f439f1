#include <qfock/linalg.hpp>

#include <utility>

namespace qfock {

SparseVec SpanBasis::reduce(SparseVec v) const {
  // Rows only involve coordinates >= their pivot, so one increasing sweep
  // eliminates every pivot for good.
  for (const auto& [pivot, row] : rows_) {
    auto it = v.find(pivot);
    if (it == v.end()) continue;
    const RatQ factor = it->second;
    for (const auto& [coord, coeff] : row) {
      RatQ& entry = v[coord];
      entry -= factor * coeff;
      if (entry.is_zero()) v.erase(coord);
    }
  }
  return v;
}

bool SpanBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const long pivot = v.begin()->first;
  const RatQ lead_inv = v.begin()->second.inverse();
  for (auto& [coord, coeff] : v) coeff *= lead_inv;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::optional<std::vector<RatQ>> solve_linear(std::vector<std::vector<RatQ>> a,
                                              std::vector<RatQ> b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const RatQ inv = a[row][col].inverse();
    for (auto& x : a[row]) x *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const RatQ f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (!b[r].is_zero()) return std::nullopt;
  if (pivot_col.size() != n) return std::nullopt;
  std::vector<RatQ> x(n);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
  return x;
}

}  // namespace qfock
