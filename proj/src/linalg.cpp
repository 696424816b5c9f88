#include "modform/linalg.hpp"

#include <utility>

namespace modform {

namespace {

// Reduces rows in place to row echelon form; returns pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < m[row].size(); ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return eliminate(rows, cols).size();
}

LinearSolution solve(const RationalMatrix& a, const std::vector<Rational>& b, std::size_t unknowns) {
  RationalMatrix aug(a);
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b.at(r));
  const auto pivots = eliminate(aug, unknowns + 1);

  LinearSolution out;
  out.consistent = pivots.empty() || pivots.back() < unknowns;
  out.rank = out.consistent ? pivots.size() : pivots.size() - 1;
  out.x.assign(unknowns, Rational(0));
  if (out.consistent)
    for (std::size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = aug[r][unknowns];
  return out;
}

}  // namespace modform
