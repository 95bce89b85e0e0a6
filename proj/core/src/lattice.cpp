#include "trop/lattice.hpp"

#include "trop/ratlin.hpp"

#include <algorithm>
#include <cassert>

namespace trop {

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw InputError("zero vector has no primitive direction");
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(w[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return w;
}

HnfResult hermite_normal_form(const IntMat& m) {
  HnfResult res{m, IntMat::identity(m.cols())};
  IntMat& h = res.h;
  IntMat& u = res.u;
  int rows = h.rows(), cols = h.cols();
  int col = 0;
  for (int r = 0; r < rows && col < cols; ++r) {
    // Gcd sweep across columns col..cols-1 on row r.
    for (;;) {
      int best = -1;
      for (int c = col; c < cols; ++c) {
        if (h.at(r, c) == 0) continue;
        if (best < 0 || mpz_cmpabs(h.at(r, c).get_mpz_t(), h.at(r, best).get_mpz_t()) < 0) best = c;
      }
      if (best < 0) break;
      if (best != col) {
        h.swap_columns(col, best);
        u.swap_columns(col, best);
      }
      bool cleared = true;
      for (int c = col + 1; c < cols; ++c) {
        if (h.at(r, c) == 0) continue;
        Int q = -fdiv(h.at(r, c), h.at(r, col));
        // round toward the smaller remainder
        h.add_column_multiple(c, col, q);
        u.add_column_multiple(c, col, q);
        if (h.at(r, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(r, col) == 0) continue;  // no pivot in this row
    if (h.at(r, col) < 0) {
      h.negate_column(col);
      u.negate_column(col);
    }
    for (int c = 0; c < col; ++c) {
      Int q = -fdiv(h.at(r, c), h.at(r, col));
      h.add_column_multiple(c, col, q);
      u.add_column_multiple(c, col, q);
    }
    ++col;
  }
  return res;
}

namespace {

int cmp_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
  SnfResult res{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  IntMat& s = res.s;
  IntMat& u = res.u;
  IntMat& v = res.v;
  int rows = s.rows(), cols = s.cols();
  int t = 0;
  while (t < rows && t < cols) {
    // Locate the entry of least absolute value in the trailing block.
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        if (s.at(r, c) == 0) continue;
        if (pr < 0 || cmp_abs(s.at(r, c), s.at(pr, pc)) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing block zero
    s.swap_rows(t, pr);
    u.swap_rows(t, pr);
    s.swap_columns(t, pc);
    v.swap_columns(t, pc);

    bool clean = true;
    for (int r = t + 1; r < rows; ++r) {
      if (s.at(r, t) == 0) continue;
      Int q = -fdiv(s.at(r, t), s.at(t, t));
      s.add_row_multiple(r, t, q);
      u.add_row_multiple(r, t, q);
      if (s.at(r, t) != 0) clean = false;
    }
    for (int c = t + 1; c < cols; ++c) {
      if (s.at(t, c) == 0) continue;
      Int q = -fdiv(s.at(t, c), s.at(t, t));
      s.add_column_multiple(c, t, q);
      v.add_column_multiple(c, t, q);
      if (s.at(t, c) != 0) clean = false;
    }
    if (!clean) continue;  // re-pick a smaller pivot

    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
    // Divisibility repair: pull a non-multiple into column t and restart the step.
    bool divisible = true;
    for (int r = t + 1; r < rows && divisible; ++r)
      for (int c = t + 1; c < cols; ++c)
        if (s.at(r, c) % s.at(t, t) != 0) {
          s.add_column_multiple(t, c, Int(1));
          v.add_column_multiple(t, c, Int(1));
          divisible = false;
          break;
        }
    if (divisible) ++t;
  }
  return res;
}

LatticeBasis saturate(const std::vector<IntVec>& dirs, int ambient) {
  for (const auto& d : dirs) assert(int(d.size()) == ambient);
  IntMat a = IntMat::from_columns(dirs, ambient);
  SnfResult snf = smith_normal_form(a);
  int r = 0;
  for (int i = 0; i < std::min(snf.s.rows(), snf.s.cols()); ++i)
    if (snf.s.at(i, i) != 0) ++r;
  // Columns of U^{-1} at indices < r form a saturated basis of the span.
  IntMat uinv = unimodular_inverse(snf.u);
  std::vector<IntVec> raw;
  for (int i = 0; i < r; ++i) raw.push_back(uinv.column(i));
  // Canonicalize through the column HNF.
  LatticeBasis basis{ambient, {}};
  if (r > 0) {
    HnfResult hnf = hermite_normal_form(IntMat::from_columns(raw, ambient));
    for (int c = 0; c < r; ++c) basis.vectors.push_back(hnf.h.column(c));
  }
  return basis;
}

bool is_saturated(const LatticeBasis& basis) {
  if (basis.vectors.empty()) return true;
  IntMat m = basis.matrix();
  SnfResult snf = smith_normal_form(m);
  int nonzero = 0;
  for (int i = 0; i < std::min(snf.s.rows(), snf.s.cols()); ++i) {
    if (snf.s.at(i, i) == 0) continue;
    if (snf.s.at(i, i) != 1) return false;
    ++nonzero;
  }
  return nonzero == basis.rank();  // independence
}

IntMat complete_to_unimodular(const LatticeBasis& basis) {
  int n = basis.ambient;
  int p = basis.rank();
  if (p == 0) return IntMat::identity(n);
  IntMat b = basis.matrix();
  SnfResult snf = smith_normal_form(b);
  for (int i = 0; i < p; ++i)
    if (snf.s.at(i, i) != 1) throw InputError("basis not saturated; completion impossible");
  IntMat uinv = unimodular_inverse(snf.u);
  IntMat d(n, n);
  for (int c = 0; c < p; ++c) d.set_column(c, b.column(c));
  for (int c = p; c < n; ++c) d.set_column(c, uinv.column(c));
  Int det = determinant(d);
  assert(det == 1 || det == -1);
  return d;
}

LatticeBasis kernel_lattice(const IntMat& b) {
  IntMat m = b.transposed();  // kernel of B^t
  SnfResult snf = smith_normal_form(m);
  int r = 0;
  for (int i = 0; i < std::min(snf.s.rows(), snf.s.cols()); ++i)
    if (snf.s.at(i, i) != 0) ++r;
  int n = m.cols();
  std::vector<IntVec> raw;
  for (int c = r; c < n; ++c) raw.push_back(snf.v.column(c));
  LatticeBasis basis{b.rows(), {}};
  if (!raw.empty()) {
    HnfResult hnf = hermite_normal_form(IntMat::from_columns(raw, n));
    for (int c = 0; c < int(raw.size()); ++c) basis.vectors.push_back(hnf.h.column(c));
  }
  return basis;
}

IntMat unimodular_inverse(const IntMat& u) {
  assert(u.rows() == u.cols());
  int n = u.rows();
  RatMat q(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) q.at(r, c) = Rat(u.at(r, c));
  RatMat inv = rat_inverse(q);
  IntMat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      assert(inv.at(r, c).get_den() == 1);
      out.at(r, c) = inv.at(r, c).get_num();
    }
  return out;
}

}  // namespace trop
