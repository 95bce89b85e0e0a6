// Small exact rational linear algebra kit (Gaussian elimination over Q).

#pragma once

#include "trop/intmat.hpp"
#include "trop/numeric.hpp"

#include <optional>

namespace trop {

// Row-major rational matrix; light on purpose.
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, Rat(0)) {}

  Rat& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  static RatMat from_int_columns(const std::vector<IntVec>& columns, int rows);
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMat& m);

int rat_rank(const RatMat& m);

// Basis of { x : M x = 0 }.
std::vector<RatVec> rat_kernel(const RatMat& m);

// One solution of M x = b, if consistent.
std::optional<RatVec> rat_solve(const RatMat& m, const RatVec& b);

// Inverse of a square nonsingular matrix.
RatMat rat_inverse(const RatMat& m);

}  // namespace trop
