// Monge-Ampere measures of tropical polynomials, mixed measures by
// polarization, stable intersection numbers, and the transversal-crossing
// oracle for plane curves.

#pragma once

#include "trop/tropical_poly.hpp"

namespace trop {

struct Atom {
  RatVec point;
  Rat mass;  // nonzero
};

struct AtomicMeasure {
  std::vector<Atom> atoms;  // distinct points, sorted

  Rat total_mass() const;
};

// Merges coinciding points and drops zero masses.
AtomicMeasure make_measure(std::vector<Atom> atoms);

// Exact Euclidean volume of a bounded polytope; zero when dim < ambient.
Rat polytope_volume(const Polyhedron& p);

// One atom per vertex a of the corner locus, with the volume of the dual
// n-cell as mass.  Total mass equals the Newton polytope volume.
AtomicMeasure monge_ampere(const TropicalPolynomial& p);

// Mixed measure of n polynomials in R^n by inclusion-exclusion over
// tropical products:
//   (1/n!) sum_{S nonempty} (-1)^{n-|S|} M(prod_{i in S} p_i),
// normalized so the diagonal reproduces monge_ampere.
AtomicMeasure mixed_monge_ampere(const std::vector<TropicalPolynomial>& ps);

// n! times the total mixed mass: the Bezout/Bernstein count.
Rat stable_intersection_number(const std::vector<TropicalPolynomial>& ps);

// Independent oracle for plane curves meeting transversally: an atom of
// mass m1*m2*|det(v1 v2)| at each proper edge crossing.  Throws
// InputError("...perturb inputs") on non-transversal configurations.
AtomicMeasure transversal_points(const WeightedComplex& c1, const WeightedComplex& c2);

}  // namespace trop
