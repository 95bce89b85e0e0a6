// Tropical Laurent polynomials max{ c_a + <a, x> }: evaluation, the corner
// locus with its lattice-length weights, and the dual regular subdivision
// of the Newton polytope.

#pragma once

#include "trop/complex.hpp"

namespace trop {

struct TropicalPolynomial {
  int n = 0;
  std::vector<std::pair<IntVec, Rat>> terms;  // exponent -> coefficient, sorted
};

// Validates: at least one term, consistent lengths, distinct exponents.
TropicalPolynomial make_polynomial(int n, std::vector<std::pair<IntVec, Rat>> terms);

struct Evaluation {
  Rat value;
  std::vector<IntVec> argmax;  // maximizing exponents, sorted
};

Evaluation evaluate(const TropicalPolynomial& p, const RatVec& x);

// Tropical multiplication (pointwise sum of functions): exponents add,
// coefficients add, coinciding monomials keep the larger coefficient.
TropicalPolynomial tropical_product(const TropicalPolynomial& a, const TropicalPolynomial& b);

// x -> p(x - shift), i.e. translate the corner locus by +shift.
TropicalPolynomial translate(const TropicalPolynomial& p, const RatVec& shift);

// Corner locus as a pure (n-1)-dimensional weighted complex.  Cells are
// dual to the edges of the regular subdivision; the weight of a cell is
// the lattice length of its dual edge.  Throws InputError on a single
// term ("affine function; empty hypersurface").
WeightedComplex hypersurface(const TropicalPolynomial& p);

// Convex hull of the exponents.
Polyhedron newton_polytope(const TropicalPolynomial& p);

struct DualSubdivision {
  // Top-dimensional cells of the regular subdivision of the Newton
  // polytope induced by the lifting a -> c_a; each cell is the sorted set
  // of exponents on one upper face.
  std::vector<std::vector<IntVec>> cells;
};

DualSubdivision dual_subdivision(const TropicalPolynomial& p);

}  // namespace trop
