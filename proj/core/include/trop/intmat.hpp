// Dense arbitrary-precision integer matrix.  Columns are the vectors:
// a basis {b_1,...,b_k} of Z^n is stored as the n x k matrix (b_1 ... b_k).

#pragma once

#include "trop/numeric.hpp"

#include <cassert>
#include <initializer_list>

namespace trop {

class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Int(0)) {
    assert(rows >= 0 && cols >= 0);
  }

  // Row-major initializer, matching how matrices read in source text.
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(int n);
  static IntMat from_columns(const std::vector<IntVec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[std::size_t(c) * rows_ + r]; }
  const Int& at(int r, int c) const { return a_[std::size_t(c) * rows_ + r]; }

  IntVec column(int c) const;
  std::vector<IntVec> columns() const;
  void set_column(int c, const IntVec& v);

  IntMat transposed() const;
  IntMat operator*(const IntMat& other) const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMat& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_; }

  void swap_columns(int i, int j);
  void negate_column(int i);
  // column j += q * column i
  void add_column_multiple(int j, int i, const Int& q);
  void swap_rows(int i, int j);
  void negate_row(int i);
  // row j += q * row i
  void add_row_multiple(int j, int i, const Int& q);

 private:
  int rows_, cols_;
  std::vector<Int> a_;  // column-major
};

// Exact determinant (square matrices), Bareiss fraction-free elimination.
Int determinant(const IntMat& m);

// p x p minor of an n x p matrix, taking the rows listed in `rows` (0-based,
// strictly increasing).
Int minor_det(const IntMat& m, const std::vector<int>& rows);

// Rank over Q.
int rank(const IntMat& m);

}  // namespace trop
