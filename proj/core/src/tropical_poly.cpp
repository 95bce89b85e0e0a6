#include "trop/tropical_poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace trop {

namespace {

bool exp_less(const std::pair<IntVec, Rat>& a, const std::pair<IntVec, Rat>& b) {
  return compare(a.first, b.first) < 0;
}

}  // namespace

TropicalPolynomial make_polynomial(int n, std::vector<std::pair<IntVec, Rat>> terms) {
  if (terms.empty()) throw InputError("tropical polynomial needs at least one term");
  for (const auto& [e, c] : terms)
    if (int(e.size()) != n) throw InputError("exponent dimension mismatch");
  std::sort(terms.begin(), terms.end(), exp_less);
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (compare(terms[i - 1].first, terms[i].first) == 0)
      throw InputError("duplicate exponent in tropical polynomial");
  return TropicalPolynomial{n, std::move(terms)};
}

Evaluation evaluate(const TropicalPolynomial& p, const RatVec& x) {
  assert(int(x.size()) == p.n);
  Evaluation ev;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    Rat v = c + dot(e, x);
    if (first || v > ev.value) {
      ev.value = v;
      ev.argmax.clear();
      first = false;
    }
    if (v == ev.value) ev.argmax.push_back(e);
  }
  return ev;
}

TropicalPolynomial tropical_product(const TropicalPolynomial& a, const TropicalPolynomial& b) {
  assert(a.n == b.n);
  std::map<IntVec, Rat> acc;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      IntVec e(a.n);
      for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
      Rat c = ca + cb;
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(std::move(e), std::move(c));
      else if (c > it->second)
        it->second = c;
    }
  std::vector<std::pair<IntVec, Rat>> terms(acc.begin(), acc.end());
  return TropicalPolynomial{a.n, std::move(terms)};
}

TropicalPolynomial translate(const TropicalPolynomial& p, const RatVec& shift) {
  assert(int(shift.size()) == p.n);
  TropicalPolynomial q = p;
  for (auto& [e, c] : q.terms) c -= dot(e, shift);
  return q;
}

namespace {

// Lattice length of the segment spanned by a set of collinear exponents.
Int collinear_lattice_length(const std::vector<IntVec>& points) {
  assert(points.size() >= 2);
  IntVec dir;
  for (std::size_t i = 1; i < points.size() && dir.empty(); ++i) {
    IntVec d(points[0].size());
    bool zero = true;
    for (std::size_t j = 0; j < d.size(); ++j) {
      d[j] = points[i][j] - points[0][j];
      if (d[j] != 0) zero = false;
    }
    if (!zero) dir = primitive(d);
  }
  assert(!dir.empty());
  Int dd = dot(dir, dir);
  Int lo = 0, hi = 0;
  for (const auto& q : points) {
    IntVec d(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) d[j] = q[j] - points[0][j];
    Int t = dot(dir, d);
    assert(t % dd == 0 && "argmax exponents not collinear");
    t /= dd;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return hi - lo;
}

}  // namespace

WeightedComplex hypersurface(const TropicalPolynomial& p) {
  if (p.terms.size() < 2) throw InputError("affine function; empty hypersurface");
  int n = p.n;
  std::vector<Polyhedron> cells;
  for (std::size_t i = 0; i < p.terms.size(); ++i)
    for (std::size_t j = i + 1; j < p.terms.size(); ++j) {
      const auto& [ei, ci] = p.terms[i];
      const auto& [ej, cj] = p.terms[j];
      std::vector<HalfSpace> constraints;
      IntVec diff(n);
      for (int k = 0; k < n; ++k) diff[k] = ei[k] - ej[k];
      constraints.push_back(HalfSpace{diff, cj - ci, RelKind::Equation});
      for (std::size_t k = 0; k < p.terms.size(); ++k) {
        if (k == i || k == j) continue;
        const auto& [ek, ck] = p.terms[k];
        IntVec d(n);
        for (int l = 0; l < n; ++l) d[l] = ei[l] - ek[l];
        constraints.push_back(HalfSpace{std::move(d), ck - ci, RelKind::Inequality});
      }
      auto region = from_hrep(constraints, n);
      if (!region || region->dim != n - 1) continue;
      bool duplicate = false;
      for (const auto& c : cells)
        if (equal(c, *region)) {
          duplicate = true;
          break;
        }
      if (!duplicate) cells.push_back(std::move(*region));
    }
  assert(!cells.empty());

  std::vector<WeightedCell> weighted;
  for (auto& cell : cells) {
    Evaluation ev = evaluate(p, relative_interior_point(cell));
    weighted.push_back(WeightedCell{std::move(cell), collinear_lattice_length(ev.argmax)});
  }
  return build_complex(std::move(weighted));
}

Polyhedron newton_polytope(const TropicalPolynomial& p) {
  std::vector<RatVec> pts;
  for (const auto& [e, c] : p.terms) pts.push_back(to_rat(e));
  return from_generators(pts, {});
}

DualSubdivision dual_subdivision(const TropicalPolynomial& p) {
  DualSubdivision sub;
  if (p.terms.size() == 1) {
    sub.cells.push_back({p.terms[0].first});
    return sub;
  }
  WeightedComplex complex = hypersurface(p);
  int newton_dim = newton_polytope(p).dim;
  int min_face_dim = p.n - newton_dim;

  std::vector<std::vector<IntVec>> cells;
  for (const auto& cell : complex.cells)
    for (const auto& f : faces(cell.poly, min_face_dim)) {
      Evaluation ev = evaluate(p, relative_interior_point(f));
      bool duplicate = false;
      for (const auto& c : cells)
        if (c.size() == ev.argmax.size() &&
            std::equal(c.begin(), c.end(), ev.argmax.begin(),
                       [](const IntVec& a, const IntVec& b) { return compare(a, b) == 0; })) {
          duplicate = true;
          break;
        }
      if (!duplicate) cells.push_back(std::move(ev.argmax));
    }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  sub.cells = std::move(cells);
  return sub;
}

}  // namespace trop
