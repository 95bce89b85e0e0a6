#include "trop/ratlin.hpp"

#include <cassert>

namespace trop {

RatMat RatMat::from_int_columns(const std::vector<IntVec>& columns, int rows) {
  RatMat m(rows, int(columns.size()));
  for (int c = 0; c < int(columns.size()); ++c) {
    assert(int(columns[c].size()) == rows);
    for (int r = 0; r < rows; ++r) m.at(r, c) = Rat(columns[c][r]);
  }
  return m;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    Rat inv = m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) /= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rat_rank(const RatMat& m) {
  RatMat copy = m;
  return int(rref(copy).size());
}

std::vector<RatVec> rat_kernel(const RatMat& m) {
  RatMat copy = m;
  std::vector<int> pivots = rref(copy);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols, Rat(0));
    v[free] = 1;
    for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = -copy.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> rat_solve(const RatMat& m, const RatVec& b) {
  assert(int(b.size()) == m.rows);
  RatMat aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
  RatVec x(m.cols, Rat(0));
  for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = aug.at(i, m.cols);
  return x;
}

RatMat rat_inverse(const RatMat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  RatMat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<int> pivots = rref(aug);
  assert(int(pivots.size()) == n && "matrix not invertible");
  RatMat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

}  // namespace trop
