#include "trop/complex.hpp"

#include "trop/ratlin.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace trop {

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

WeightedComplex build_complex(std::vector<WeightedCell> cells) {
  if (cells.empty()) throw InputError("not a complex; no cells");
  int n = cells[0].poly.ambient;
  int p = cells[0].poly.dim;
  for (const auto& cell : cells) {
    if (cell.poly.ambient != n) throw InputError("not a complex; mixed ambient dimensions");
    if (cell.poly.dim != p) throw InputError("not pure");
    if (cell.weight == 0) throw InputError("not a complex; zero weight");
  }

  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      auto meet = intersection(cells[i].poly, cells[j].poly);
      if (!meet) continue;
      for (const Polyhedron* side : {&cells[i].poly, &cells[j].poly}) {
        std::vector<Polyhedron> candidates = faces(*side, meet->dim);
        bool found = false;
        for (const auto& f : candidates)
          if (equal(f, *meet)) {
            found = true;
            break;
          }
        if (!found) throw InputError("not a complex");
      }
    }

  WeightedComplex complex;
  complex.ambient = n;
  complex.dim = p;
  complex.cells = std::move(cells);
  if (p >= 1) {
    for (int ci = 0; ci < int(complex.cells.size()); ++ci) {
      for (auto& f : faces(complex.cells[ci].poly, p - 1)) {
        int fi = -1;
        for (int k = 0; k < int(complex.facets.size()); ++k)
          if (equal(complex.facets[k], f)) {
            fi = k;
            break;
          }
        if (fi < 0) {
          complex.facets.push_back(std::move(f));
          complex.incidence.emplace_back();
          fi = int(complex.facets.size()) - 1;
        }
        complex.incidence[fi].push_back(ci);
      }
    }
    // canonical facet order
    std::vector<int> order(complex.facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return compare(complex.facets[a], complex.facets[b]) < 0;
    });
    std::vector<Polyhedron> facets;
    std::vector<std::vector<int>> incidence;
    for (int k : order) {
      facets.push_back(std::move(complex.facets[k]));
      incidence.push_back(std::move(complex.incidence[k]));
    }
    complex.facets = std::move(facets);
    complex.incidence = std::move(incidence);
  }
  return complex;
}

namespace {

// Solves basis * x = w exactly; w must lie in the lattice spanned by the
// (saturated) basis, so x is integral.
IntVec coordinates_in(const LatticeBasis& basis, const IntVec& w) {
  RatMat m = RatMat::from_int_columns(basis.vectors, basis.ambient);
  auto x = rat_solve(m, to_rat(w));
  assert(x && "vector outside the spanned subspace");
  IntVec out(x->size());
  for (std::size_t i = 0; i < x->size(); ++i) {
    assert((*x)[i].get_den() == 1);
    out[i] = (*x)[i].get_num();
  }
  return out;
}

// The unique facet inequality of `cell` tight on the star's base point
// decides the inward orientation.
IntVec orient_inward(const Polyhedron& cell, const RatVec& base, IntVec v) {
  std::vector<int> tight = cell.tight_inequalities(base);
  assert(tight.size() == 1 && "base must lie in the relative interior of a facet");
  const HalfSpace& hs = cell.hrep[tight[0]];
  int s = sgn(dot(hs.normal, v));
  assert(s != 0);
  if (s < 0)
    for (auto& x : v) x = -x;
  return v;
}

}  // namespace

FacetStar facet_star(const WeightedComplex& complex, int facet_index) {
  assert(facet_index >= 0 && facet_index < int(complex.facets.size()));
  FacetStar star;
  star.ambient = complex.ambient;
  star.dim = complex.dim;
  star.facet = facet_index;
  star.w = complex.facets[facet_index];
  star.base = relative_interior_point(star.w);
  star.frame = direction_lattice(star.w).vectors;
  assert(int(star.frame.size()) == complex.dim - 1);

  for (int ci : complex.incidence[facet_index]) {
    const Polyhedron& cell = complex.cells[ci].poly;
    LatticeBasis cell_lattice = direction_lattice(cell);
    // Frame coordinates inside the cell's lattice, completed to a
    // unimodular basis there; the appended column maps to v_P.
    LatticeBasis frame_coords{cell_lattice.rank(), {}};
    for (const auto& w : star.frame) frame_coords.vectors.push_back(coordinates_in(cell_lattice, w));
    IntMat completion = complete_to_unimodular(frame_coords);
    IntVec v = cell_lattice.matrix() * completion.column(cell_lattice.rank() - 1);
    star.branches.push_back(Branch{ci, complex.cells[ci].weight, orient_inward(cell, star.base, std::move(v))});
  }
  return star;
}

IntMat projection_along(const FacetStar& star) {
  int n = star.ambient;
  int p = star.dim;
  LatticeBasis frame{n, star.frame};
  IntMat completion = complete_to_unimodular(frame);
  IntMat inv = unimodular_inverse(completion);
  IntMat h(n - p + 1, n);
  for (int r = 0; r < n - p + 1; ++r)
    for (int c = 0; c < n; ++c) h.at(r, c) = inv.at(p - 1 + r, c);
  return h;
}

BalanceReport is_balanced(const WeightedComplex& complex) {
  BalanceReport report;
  report.balanced = true;
  for (int fi = 0; fi < int(complex.facets.size()); ++fi) {
    FacetStar star = facet_star(complex, fi);
    FacetBalance fb;
    fb.facet = fi;
    fb.weighted_sum.assign(complex.ambient, Int(0));
    for (const auto& br : star.branches)
      for (int i = 0; i < complex.ambient; ++i) fb.weighted_sum[i] += br.weight * br.inward[i];

    std::vector<IntVec> cols = star.frame;
    cols.push_back(fb.weighted_sum);
    IntMat m = IntMat::from_columns(cols, complex.ambient);
    for (const auto& J : index_subsets(complex.ambient, complex.dim))
      if (minor_det(m, J) != 0) fb.failing_minors.push_back(J);

    fb.defect = projection_along(star) * fb.weighted_sum;
    fb.balanced = fb.failing_minors.empty();
    assert(fb.balanced == is_zero(fb.defect));
    report.balanced = report.balanced && fb.balanced;
    report.facets.push_back(std::move(fb));
  }
  return report;
}

bool sub_independent(const std::vector<IntVec>& vectors) {
  int s = int(vectors.size());
  if (s <= 1) return true;
  int ambient = int(vectors[0].size());
  // Enough to test the maximal proper subsets.
  for (int skip = 0; skip < s; ++skip) {
    std::vector<IntVec> rest;
    for (int i = 0; i < s; ++i)
      if (i != skip) rest.push_back(vectors[i]);
    if (rank(IntMat::from_columns(rest, ambient)) != s - 1) return false;
  }
  return true;
}

ExtremalityReport is_strongly_extremal(const WeightedComplex& complex) {
  ExtremalityReport report;
  report.balanced = is_balanced(complex).balanced;

  // Dual graph: cells joined through shared facets.
  int nc = int(complex.cells.size());
  std::vector<int> comp(nc);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const auto& inc : complex.incidence)
    for (std::size_t i = 1; i < inc.size(); ++i) comp[find(inc[i])] = find(inc[0]);
  std::vector<int> roots;
  for (int i = 0; i < nc; ++i) roots.push_back(find(i));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  report.components = int(roots.size());
  report.connected = report.components <= 1;

  int expected = complex.ambient - complex.dim + 2;
  report.valency_ok = true;
  report.stars_ok = true;
  for (int fi = 0; fi < int(complex.facets.size()); ++fi) {
    FacetStar star = facet_star(complex, fi);
    IntMat h = projection_along(star);
    std::vector<IntVec> projected;
    for (const auto& br : star.branches) projected.push_back(h * br.inward);

    StarCheck check;
    check.facet = fi;
    check.valency = int(star.branches.size());
    check.valency_ok = check.valency == expected;
    check.subindependent = sub_independent(projected);
    check.spanning =
        rank(IntMat::from_columns(projected, complex.ambient - complex.dim + 1)) ==
        complex.ambient - complex.dim + 1;
    report.valency_ok = report.valency_ok && check.valency_ok;
    report.stars_ok = report.stars_ok && check.subindependent && check.spanning;
    report.stars.push_back(check);
  }
  report.strongly_extremal = report.connected && report.valency_ok && report.stars_ok;
  return report;
}

}  // namespace trop
