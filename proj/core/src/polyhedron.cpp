#include "trop/polyhedron.hpp"

#include "trop/ratlin.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace trop {

namespace {

// Clears denominators and divides by the content; the zero vector is
// returned unchanged.
IntVec primitive_from_rat(const RatVec& v) {
  Int lcm = 1;
  for (const auto& x : v) {
    Int d = x.get_den();
    lcm = lcm / gcd(lcm, d) * d;
  }
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(lcm);
    assert(s.get_den() == 1);
    w[i] = s.get_num();
  }
  if (is_zero(w)) return w;
  return primitive(w);
}

// Unique primitive integer generator of a one-dimensional rational kernel,
// or empty when the kernel dimension differs from one.
IntVec kernel_direction(const std::vector<IntVec>& columns, int ambient) {
  // z such that <z, c> = 0 for every column c.
  RatMat m(int(columns.size()), ambient);
  for (int r = 0; r < int(columns.size()); ++r)
    for (int c = 0; c < ambient; ++c) m.at(r, c) = Rat(columns[r][c]);
  std::vector<RatVec> kernel = rat_kernel(m);
  if (kernel.size() != 1) return {};
  return primitive_from_rat(kernel[0]);
}

void sort_unique(std::vector<IntVec>& v) {
  std::sort(v.begin(), v.end(), [](const IntVec& a, const IntVec& b) { return compare(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ConeDual dual_description(const std::vector<IntVec>& gens_in, int ambient) {
  std::vector<IntVec> gens;
  for (const auto& g : gens_in) {
    assert(int(g.size()) == ambient);
    if (!is_zero(g)) gens.push_back(primitive(g));
  }
  sort_unique(gens);

  ConeDual out;
  LatticeBasis complement = kernel_lattice(IntMat::from_columns(gens, ambient));
  out.span_complement = complement.vectors;
  out.dim = ambient - complement.rank();
  if (out.dim == 0) return out;

  int need = out.dim - 1;
  int m = int(gens.size());
  std::vector<int> idx(need);
  std::set<IntVec> seen;

  // Enumerate subsets of size dim-1; every facet is spanned by generators.
  std::vector<int> stack;
  stack.reserve(need);
  auto process = [&](const std::vector<int>& subset) {
    std::vector<IntVec> cols = complement.vectors;
    for (int i : subset) cols.push_back(gens[i]);
    IntVec normal = kernel_direction(cols, ambient);
    if (normal.empty()) return;  // subset does not span a hyperplane of the span
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      int s = sgn(dot(normal, g));
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (pos && neg) return;  // not supporting
    }
    if (neg)
      for (auto& x : normal) x = -x;
    if (seen.insert(normal).second) out.facet_normals.push_back(normal);
  };

  // Iterative combination walk.
  if (need == 0) {
    process({});
  } else {
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
      if (int(subset.size()) == need) {
        process(subset);
        return;
      }
      // Not enough remaining generators to complete the subset.
      for (int i = start; i <= m - (need - int(subset.size())); ++i) {
        subset.push_back(i);
        rec(i + 1);
        subset.pop_back();
      }
    };
    rec(0);
  }
  sort_unique(out.facet_normals);
  return out;
}

namespace {

// Scales (offset, normal) to a primitive integer vector (-a, nu) used as a
// homogeneous cone generator for <nu, x> - a*y0 >= 0.
IntVec homogenize_constraint(const HalfSpace& hs) {
  RatVec lifted(hs.normal.size() + 1);
  lifted[0] = -hs.offset;
  for (std::size_t i = 0; i < hs.normal.size(); ++i) lifted[i + 1] = Rat(hs.normal[i]);
  return primitive_from_rat(lifted);
}

// Splits a homogeneous covector (c0, c') into the affine constraint
// <c', x> >= -c0 with primitive integer normal.
HalfSpace dehomogenize(const IntVec& cov, RelKind kind) {
  IntVec normal(cov.begin() + 1, cov.end());
  Int g = 0;
  for (const auto& x : normal) g = gcd(g, x);
  assert(g != 0);
  for (auto& x : normal) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  Rat offset = make_rat(-cov[0], g);
  if (kind == RelKind::Equation) {
    // canonical sign: first nonzero normal entry positive
    for (const auto& x : normal) {
      if (x == 0) continue;
      if (x < 0) {
        for (auto& y : normal) y = -y;
        offset = -offset;
      }
      break;
    }
  }
  return HalfSpace{std::move(normal), std::move(offset), kind};
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
  if (a.kind != b.kind) return a.kind == RelKind::Equation;
  int c = compare(a.normal, b.normal);
  if (c != 0) return c < 0;
  return a.offset < b.offset;
}

// V-representation from the facet/line description of the homogenization
// cone; returns false when the cone carries no point at y0 > 0.
bool extract_generators(const ConeDual& cd, int n, std::vector<RatVec>& vertices,
                        std::vector<IntVec>& rays) {
  vertices.clear();
  rays.clear();
  for (const auto& f : cd.facet_normals) {
    assert(f[0] >= 0);
    if (f[0] > 0) {
      RatVec v(n);
      for (int i = 0; i < n; ++i) v[i] = make_rat(f[i + 1], f[0]);
      vertices.push_back(std::move(v));
    } else {
      IntVec r(f.begin() + 1, f.end());
      if (!is_zero(r)) rays.push_back(primitive(r));
    }
  }
  for (const auto& e : cd.span_complement) {
    assert(e[0] == 0);
    IntVec r(e.begin() + 1, e.end());
    IntVec rn = r;
    for (auto& x : rn) x = -x;
    rays.push_back(primitive(r));
    rays.push_back(primitive(rn));
  }
  if (vertices.empty()) return false;
  std::sort(vertices.begin(), vertices.end(),
            [](const RatVec& a, const RatVec& b) { return compare(a, b) < 0; });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  sort_unique(rays);
  return true;
}

// Homogenization cone constraints -> canonical halfspaces of the slice.
// Facets of the cone that lie entirely at infinity (no generator on them
// has a positive 0-coordinate) slice to redundant constraints and are
// dropped; what remains is exactly the facet list of the polyhedron.
std::vector<HalfSpace> extract_hrep(const ConeDual& cd, const std::vector<IntVec>& gens) {
  std::vector<HalfSpace> hrep;
  for (const auto& e : cd.span_complement) {
    IntVec normal(e.begin() + 1, e.end());
    assert(!is_zero(normal));  // would force an empty or trivial slice
    hrep.push_back(dehomogenize(e, RelKind::Equation));
  }
  for (const auto& f : cd.facet_normals) {
    bool touches_slice = false;
    for (const auto& g : gens)
      if (g[0] > 0 && dot(f, g) == 0) {
        touches_slice = true;
        break;
      }
    if (!touches_slice) continue;
    hrep.push_back(dehomogenize(f, RelKind::Inequality));
  }
  std::sort(hrep.begin(), hrep.end(), halfspace_less);
  return hrep;
}

}  // namespace

Polyhedron from_generators(const std::vector<RatVec>& vertices, const std::vector<IntVec>& rays) {
  if (vertices.empty()) throw InputError("polyhedron needs at least one vertex");
  int n = int(vertices[0].size());
  std::vector<IntVec> gens;
  for (const auto& v : vertices) {
    if (int(v.size()) != n) throw InputError("vertex dimension mismatch");
    RatVec lifted(n + 1);
    lifted[0] = 1;
    for (int i = 0; i < n; ++i) lifted[i + 1] = v[i];
    gens.push_back(primitive_from_rat(lifted));
  }
  for (const auto& r : rays) {
    if (int(r.size()) != n) throw InputError("ray dimension mismatch");
    if (is_zero(r)) throw InputError("zero ray");
    IntVec lifted(n + 1, Int(0));
    for (int i = 0; i < n; ++i) lifted[i + 1] = r[i];
    gens.push_back(primitive(lifted));
  }

  ConeDual cd = dual_description(gens, n + 1);
  Polyhedron p;
  p.ambient = n;
  p.dim = cd.dim - 1;
  p.hrep = extract_hrep(cd, gens);

  // Second dualization for the canonical minimal generator sets.
  std::vector<IntVec> kgens;
  IntVec y0(n + 1, Int(0));
  y0[0] = 1;
  kgens.push_back(y0);
  for (const auto& hs : p.hrep) {
    IntVec c = homogenize_constraint(hs);
    kgens.push_back(c);
    if (hs.kind == RelKind::Equation) {
      IntVec cn = c;
      for (auto& x : cn) x = -x;
      kgens.push_back(cn);
    }
  }
  ConeDual kd = dual_description(kgens, n + 1);
  bool nonempty = extract_generators(kd, n, p.vertices, p.rays);
  assert(nonempty);
  return p;
}

std::optional<Polyhedron> from_hrep(const std::vector<HalfSpace>& constraints, int ambient) {
  std::vector<IntVec> kgens;
  IntVec y0(ambient + 1, Int(0));
  y0[0] = 1;
  kgens.push_back(y0);
  for (const auto& hs : constraints) {
    assert(int(hs.normal.size()) == ambient);
    IntVec c = homogenize_constraint(hs);
    if (is_zero(c)) continue;  // trivially true
    kgens.push_back(c);
    if (hs.kind == RelKind::Equation) {
      IntVec cn = c;
      for (auto& x : cn) x = -x;
      kgens.push_back(cn);
    }
  }
  ConeDual kd = dual_description(kgens, ambient + 1);
  std::vector<RatVec> vertices;
  std::vector<IntVec> rays;
  if (!extract_generators(kd, ambient, vertices, rays)) return std::nullopt;
  // Infeasible systems can still produce a y0 > 0 dual facet; verify.
  for (const auto& hs : constraints) {
    Rat lhs = dot(hs.normal, vertices[0]);
    if (hs.kind == RelKind::Equation ? lhs != hs.offset : lhs < hs.offset) return std::nullopt;
  }
  return from_generators(vertices, rays);
}

std::optional<Polyhedron> intersection(const Polyhedron& a, const Polyhedron& b) {
  assert(a.ambient == b.ambient);
  std::vector<HalfSpace> all = a.hrep;
  all.insert(all.end(), b.hrep.begin(), b.hrep.end());
  return from_hrep(all, a.ambient);
}

bool Polyhedron::contains(const RatVec& x) const {
  assert(int(x.size()) == ambient);
  for (const auto& hs : hrep) {
    Rat lhs = dot(hs.normal, x);
    if (hs.kind == RelKind::Equation ? lhs != hs.offset : lhs < hs.offset) return false;
  }
  return true;
}

bool Polyhedron::relint_contains(const RatVec& x) const {
  assert(int(x.size()) == ambient);
  for (const auto& hs : hrep) {
    Rat lhs = dot(hs.normal, x);
    if (hs.kind == RelKind::Equation ? lhs != hs.offset : lhs <= hs.offset) return false;
  }
  return true;
}

std::vector<int> Polyhedron::tight_inequalities(const RatVec& x) const {
  std::vector<int> out;
  for (int i = 0; i < int(hrep.size()); ++i)
    if (hrep[i].kind == RelKind::Inequality && dot(hrep[i].normal, x) == hrep[i].offset)
      out.push_back(i);
  return out;
}

int compare(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient != b.ambient) return a.ambient < b.ambient ? -1 : 1;
  if (a.dim != b.dim) return a.dim < b.dim ? -1 : 1;
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size() ? -1 : 1;
  if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    int c = compare(a.vertices[i], b.vertices[i]);
    if (c != 0) return c;
  }
  for (std::size_t i = 0; i < a.rays.size(); ++i) {
    int c = compare(a.rays[i], b.rays[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::vector<Polyhedron> faces(const Polyhedron& p, int k) {
  if (k < 0 || k > p.dim) return {};
  std::vector<Polyhedron> level{p};
  for (int d = p.dim; d > k; --d) {
    std::vector<Polyhedron> next;
    for (const Polyhedron& f : level) {
      for (const auto& hs : f.hrep) {
        if (hs.kind != RelKind::Inequality) continue;
        std::vector<RatVec> vs;
        std::vector<IntVec> rs;
        for (const auto& v : f.vertices)
          if (dot(hs.normal, v) == hs.offset) vs.push_back(v);
        for (const auto& r : f.rays)
          if (dot(hs.normal, r) == 0) rs.push_back(r);
        if (vs.empty()) continue;
        Polyhedron child = from_generators(vs, rs);
        assert(child.dim == d - 1);
        next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const Polyhedron& a, const Polyhedron& b) { return compare(a, b) < 0; });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Polyhedron& a, const Polyhedron& b) { return equal(a, b); }),
               next.end());
    level = std::move(next);
  }
  return level;
}

LatticeBasis direction_lattice(const Polyhedron& p) {
  std::vector<IntVec> dirs;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    RatVec diff(p.ambient);
    for (int j = 0; j < p.ambient; ++j) diff[j] = p.vertices[i][j] - p.vertices[0][j];
    IntVec d = primitive_from_rat(diff);
    if (!is_zero(d)) dirs.push_back(std::move(d));
  }
  for (const auto& r : p.rays) dirs.push_back(r);
  if (dirs.empty()) return LatticeBasis{p.ambient, {}};
  return saturate(dirs, p.ambient);
}

RatVec relative_interior_point(const Polyhedron& p) {
  RatVec x(p.ambient, Rat(0));
  for (const auto& v : p.vertices)
    for (int i = 0; i < p.ambient; ++i) x[i] += v[i];
  Rat inv = make_rat(1, Int(p.vertices.size()));
  for (auto& c : x) c *= inv;
  for (const auto& r : p.rays)
    for (int i = 0; i < p.ambient; ++i) x[i] += Rat(r[i]);
  return x;
}

Polyhedron scaled(const Polyhedron& p, const Rat& factor) {
  assert(factor > 0);
  std::vector<RatVec> vs = p.vertices;
  for (auto& v : vs)
    for (auto& c : v) c *= factor;
  return from_generators(vs, p.rays);
}

}  // namespace trop
