#include "trop/measure.hpp"

#include "trop/ratlin.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace trop {

Rat AtomicMeasure::total_mass() const {
  Rat total = 0;
  for (const auto& a : atoms) total += a.mass;
  return total;
}

AtomicMeasure make_measure(std::vector<Atom> atoms) {
  std::map<RatVec, Rat> acc;
  for (auto& a : atoms) acc[a.point] += a.mass;
  AtomicMeasure m;
  for (auto& [pt, mass] : acc)
    if (mass != 0) m.atoms.push_back(Atom{pt, mass});
  return m;
}

namespace {

Rat rat_det(const std::vector<RatVec>& cols) {
  int n = int(cols.size());
  RatMat m(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) m.at(r, c) = cols[c][r];
  // Gaussian elimination with pivot product.
  Rat det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m.at(r, k) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(k, c));
      det = -det;
    }
    det *= m.at(k, k);
    for (int r = k + 1; r < n; ++r) {
      if (m.at(r, k) == 0) continue;
      Rat f = m.at(r, k) / m.at(k, k);
      for (int c = k; c < n; ++c) m.at(r, c) -= f * m.at(k, c);
    }
  }
  return det;
}

// Simplices of a bounded polytope as (dim+1)-tuples of vertices, by coning
// the first vertex over the triangulated facets it avoids.
void triangulate(const Polyhedron& p, std::vector<std::vector<RatVec>>& out,
                 std::vector<RatVec> prefix) {
  assert(p.rays.empty());
  if (p.dim == 0) {
    prefix.push_back(p.vertices[0]);
    out.push_back(std::move(prefix));
    return;
  }
  const RatVec& apex = p.vertices[0];
  prefix.push_back(apex);
  for (const auto& f : faces(p, p.dim - 1)) {
    if (f.contains(apex)) continue;
    triangulate(f, out, prefix);
  }
}

}  // namespace

Rat polytope_volume(const Polyhedron& p) {
  if (p.dim < p.ambient) return Rat(0);
  assert(p.rays.empty() && "volume of an unbounded polyhedron");
  std::vector<std::vector<RatVec>> simplices;
  triangulate(p, simplices, {});
  Rat nfact = 1;
  for (int i = 2; i <= p.ambient; ++i) nfact *= i;
  Rat total = 0;
  for (const auto& s : simplices) {
    assert(int(s.size()) == p.ambient + 1);
    std::vector<RatVec> edges;
    for (std::size_t i = 1; i < s.size(); ++i) {
      RatVec e(p.ambient);
      for (int j = 0; j < p.ambient; ++j) e[j] = s[i][j] - s[0][j];
      edges.push_back(std::move(e));
    }
    Rat d = rat_det(edges);
    if (d < 0) d = -d;
    total += d / nfact;
  }
  return total;
}

AtomicMeasure monge_ampere(const TropicalPolynomial& p) {
  if (p.terms.size() < 2) return AtomicMeasure{};
  WeightedComplex complex = hypersurface(p);
  std::vector<Atom> atoms;
  std::vector<RatVec> seen;
  for (const auto& cell : complex.cells)
    for (const auto& v : faces(cell.poly, 0)) {
      const RatVec& pt = v.vertices[0];
      bool dup = false;
      for (const auto& q : seen)
        if (compare(q, pt) == 0) {
          dup = true;
          break;
        }
      if (dup) continue;
      seen.push_back(pt);
      Evaluation ev = evaluate(p, pt);
      std::vector<RatVec> dual_pts;
      for (const auto& e : ev.argmax) dual_pts.push_back(to_rat(e));
      Polyhedron dual = from_generators(dual_pts, {});
      assert(dual.dim == p.n && "vertex of the corner locus must have a full dual cell");
      atoms.push_back(Atom{pt, polytope_volume(dual)});
    }
  return make_measure(std::move(atoms));
}

AtomicMeasure mixed_monge_ampere(const std::vector<TropicalPolynomial>& ps) {
  if (ps.empty()) throw InputError("mixed measure needs polynomials");
  int n = ps[0].n;
  if (int(ps.size()) != n) throw InputError("mixed measure needs exactly n polynomials in R^n");
  for (const auto& p : ps)
    if (p.n != n) throw InputError("ambient dimension mismatch");

  Rat nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;

  std::vector<Atom> atoms;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::optional<TropicalPolynomial> q;
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        ++size;
        q = q ? tropical_product(*q, ps[i]) : ps[i];
      }
    int sign = ((n - size) % 2 == 0) ? 1 : -1;
    AtomicMeasure part = monge_ampere(*q);
    for (auto& a : part.atoms)
      atoms.push_back(Atom{std::move(a.point), Rat(sign) * a.mass / nfact});
  }
  return make_measure(std::move(atoms));
}

Rat stable_intersection_number(const std::vector<TropicalPolynomial>& ps) {
  int n = int(ps.size());
  Rat nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  return nfact * mixed_monge_ampere(ps).total_mass();
}

AtomicMeasure transversal_points(const WeightedComplex& c1, const WeightedComplex& c2) {
  if (c1.ambient != 2 || c2.ambient != 2 || c1.dim != 1 || c2.dim != 1)
    throw InputError("transversal oracle handles plane curves only");
  std::vector<Atom> atoms;
  for (const auto& e1 : c1.cells)
    for (const auto& e2 : c2.cells) {
      auto meet = intersection(e1.poly, e2.poly);
      if (!meet) continue;
      if (meet->dim != 0) throw InputError("non-transversal configuration; perturb inputs");
      const RatVec& x = meet->vertices[0];
      if (!e1.poly.relint_contains(x) || !e2.poly.relint_contains(x))
        throw InputError("non-transversal configuration; perturb inputs");
      IntVec v1 = direction_lattice(e1.poly).vectors[0];
      IntVec v2 = direction_lattice(e2.poly).vectors[0];
      Int det = v1[0] * v2[1] - v1[1] * v2[0];
      assert(det != 0);
      if (det < 0) det = -det;
      atoms.push_back(Atom{x, Rat(e1.weight * e2.weight * det)});
    }
  return make_measure(std::move(atoms));
}

}  // namespace trop
