// Exact rational polyhedra, doubly described.
//
// Both conversion directions run through one primitive: the dual
// description of a finitely generated cone, computed by enumerating
// generator subsets that span candidate facet hyperplanes.  Everything is
// exact; the representations produced are canonical (facets of the cone
// on the H side, facets of the dual cone on the V side), so polyhedra can
// be compared for set equality componentwise.
//
// Scale target is the desk scale of tropical cells: ambient dimension a
// handful, a few dozen constraints.

#pragma once

#include "trop/lattice.hpp"

#include <optional>

namespace trop {

enum class RelKind { Equation, Inequality };

// <normal, x> >= offset (Inequality) or == offset (Equation); the normal
// is a primitive integer vector.
struct HalfSpace {
  IntVec normal;
  Rat offset;
  RelKind kind = RelKind::Inequality;

  bool operator==(const HalfSpace&) const = default;
};

struct Polyhedron {
  int ambient = 0;
  int dim = -1;
  std::vector<RatVec> vertices;    // canonical, lexicographically sorted
  std::vector<IntVec> rays;        // primitive; a line shows up as a +/- pair
  std::vector<HalfSpace> hrep;     // equations first, then facet inequalities

  bool contains(const RatVec& x) const;
  bool relint_contains(const RatVec& x) const;

  // Indices into hrep of the inequalities tight at x (x must lie in the
  // polyhedron for the result to mean anything).
  std::vector<int> tight_inequalities(const RatVec& x) const;
};

// Canonical-form comparison; 0 iff the polyhedra are equal as sets.
int compare(const Polyhedron& a, const Polyhedron& b);
inline bool equal(const Polyhedron& a, const Polyhedron& b) { return compare(a, b) == 0; }

// Dual description of cone(gens) in Z^ambient:
//   cone(gens) = { y : <f, y> >= 0 for all facet_normals f,
//                      <e, y> =  0 for all span_complement e }.
struct ConeDual {
  std::vector<IntVec> facet_normals;
  std::vector<IntVec> span_complement;
  int dim = 0;  // dim span(gens)
};
ConeDual dual_description(const std::vector<IntVec>& gens, int ambient);

// Construction.  from_generators requires at least one vertex; rays must
// be nonzero.  from_hrep returns nullopt for an empty intersection.
Polyhedron from_generators(const std::vector<RatVec>& vertices, const std::vector<IntVec>& rays);
std::optional<Polyhedron> from_hrep(const std::vector<HalfSpace>& constraints, int ambient);

std::optional<Polyhedron> intersection(const Polyhedron& a, const Polyhedron& b);

// All k-dimensional faces; empty list when k is out of range.
std::vector<Polyhedron> faces(const Polyhedron& p, int k);

// Saturated basis of the linear span of P - base point.
LatticeBasis direction_lattice(const Polyhedron& p);

// Vertex average plus the sum of the rays; exact and deterministic.
RatVec relative_interior_point(const Polyhedron& p);

// Image of P under x -> factor * x, factor > 0.
Polyhedron scaled(const Polyhedron& p, const Rat& factor);

}  // namespace trop
