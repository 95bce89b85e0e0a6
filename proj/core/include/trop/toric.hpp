// Binomial equations of toric sets and their projective degrees.
//
// For a saturated basis B of a rational subspace, the kernel generators
// xi of Ker B^t /\ Z^n split as xi = xi+ - xi- with disjoint nonnegative
// supports; each gives the binomial  z^{xi+} - gamma z^{xi-}  whose phase
// constant gamma is carried symbolically as a rational fraction of a full
// turn.

#pragma once

#include "trop/lattice.hpp"

namespace trop {

struct Binomial {
  IntVec xi_plus;   // nonnegative
  IntVec xi_minus;  // nonnegative, support disjoint from xi_plus
  Rat phase;        // angle of gamma as a fraction of a full turn, in [0,1)

  IntVec exponent() const;  // xi_plus - xi_minus
};

struct BinomialSystem {
  int ambient = 0;
  std::vector<Binomial> binomials;
};

// One binomial per kernel generator; `phases` lists the torus angle per
// completion column (defaults to zero).  Throws InputError when the basis
// is not saturated.
BinomialSystem binomial_system(const LatticeBasis& basis, const std::vector<Rat>& phases = {});

// max{ sum xi+, sum xi- }: the degree of the projective closure.
Int projective_degree(const Binomial& b);

// Exponent scaled by m >= 1 (the m-fold covers).
Binomial scaled(const Binomial& b, const Int& m);

}  // namespace trop
