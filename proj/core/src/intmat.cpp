#include "trop/intmat.hpp"

namespace trop {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
  a_.assign(std::size_t(rows_) * cols_, Int(0));
  int r = 0;
  for (const auto& row : rows) {
    assert(int(row.size()) == cols_);
    int c = 0;
    for (long x : row) at(r, c++) = x;
    ++r;
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols, int rows) {
  IntMat m(rows, int(cols.size()));
  for (int c = 0; c < int(cols.size()); ++c) {
    assert(int(cols[c].size()) == rows);
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

IntVec IntMat::column(int c) const {
  IntVec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<IntVec> IntMat::columns() const {
  std::vector<IntVec> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = column(c);
  return out;
}

void IntMat::set_column(int c, const IntVec& v) {
  assert(int(v.size()) == rows_);
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
  assert(cols_ == other.rows_);
  IntMat p(rows_, other.cols_);
  for (int c = 0; c < other.cols_; ++c)
    for (int k = 0; k < cols_; ++k) {
      const Int& f = other.at(k, c);
      if (f == 0) continue;
      for (int r = 0; r < rows_; ++r) p.at(r, c) += at(r, k) * f;
    }
  return p;
}

IntVec IntMat::operator*(const IntVec& v) const {
  assert(int(v.size()) == cols_);
  IntVec out(rows_, Int(0));
  for (int c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (int r = 0; r < rows_; ++r) out[r] += at(r, c) * v[c];
  }
  return out;
}

void IntMat::swap_columns(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::negate_column(int i) {
  for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMat::add_column_multiple(int j, int i, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, j) += q * at(r, i);
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::add_row_multiple(int j, int i, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c) at(j, c) += q * at(i, c);
}

Int determinant(const IntMat& m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) {
        Int t = a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c);
        mpz_divexact(a.at(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

Int minor_det(const IntMat& m, const std::vector<int>& rows) {
  assert(int(rows.size()) == m.cols());
  IntMat sub(int(rows.size()), m.cols());
  for (int r = 0; r < int(rows.size()); ++r)
    for (int c = 0; c < m.cols(); ++c) sub.at(r, c) = m.at(rows[r], c);
  return determinant(sub);
}

int rank(const IntMat& m) {
  IntMat a = m;
  int rows = a.rows(), cols = a.cols();
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (a.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(rk, piv);
    for (int r = rk + 1; r < rows; ++r) {
      if (a.at(r, c) == 0) continue;
      Int g = gcd(a.at(rk, c), a.at(r, c));
      Int f1 = a.at(rk, c) / g, f2 = a.at(r, c) / g;
      for (int cc = c; cc < cols; ++cc) a.at(r, cc) = a.at(r, cc) * f1 - a.at(rk, cc) * f2;
    }
    ++rk;
  }
  return rk;
}

}  // namespace trop
