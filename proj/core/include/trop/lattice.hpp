// Exact integer lattice algorithms: primitive vectors, Hermite and Smith
// normal forms, saturated bases of rational subspaces, unimodular
// completions, and integer kernels.
//
// Conventions:
//  * bases are matrix columns;
//  * column HNF: M*U = H with U unimodular, pivot columns leftmost, pivots
//    positive, off-pivot entries in a pivot row reduced into [0, pivot);
//  * a basis is saturated when it generates span /\ Z^n, equivalently its
//    Smith normal form has all invariant factors equal to 1.

#pragma once

#include "trop/intmat.hpp"

namespace trop {

// v / gcd(components v).  Throws InputError on the zero vector.
IntVec primitive(const IntVec& v);

struct HnfResult {
  IntMat h;  // column Hermite normal form, same shape as the input
  IntMat u;  // unimodular, input * u == h
};

HnfResult hermite_normal_form(const IntMat& m);

struct SnfResult {
  IntMat s;  // diagonal, d1 | d2 | ..., entries nonnegative
  IntMat u;  // unimodular (left)
  IntMat v;  // unimodular (right), u * input * v == s
};

SnfResult smith_normal_form(const IntMat& m);

// Basis of the intersection of a rational subspace with Z^n.
struct LatticeBasis {
  int ambient = 0;
  std::vector<IntVec> vectors;  // linearly independent, saturated

  int rank() const { return int(vectors.size()); }
  IntMat matrix() const { return IntMat::from_columns(vectors, ambient); }
};

// Saturated basis of span_R(dirs) /\ Z^n.  Zero span yields an empty basis.
LatticeBasis saturate(const std::vector<IntVec>& dirs, int ambient);

// True iff the columns are independent and generate span /\ Z^n.
bool is_saturated(const LatticeBasis& basis);

// Unimodular n x n matrix whose first columns are the basis vectors.
// Throws InputError when the basis is not saturated.
IntMat complete_to_unimodular(const LatticeBasis& basis);

// Saturated basis of { x in Z^n : B^t x = 0 } for an n x k matrix B.
LatticeBasis kernel_lattice(const IntMat& b);

// Exact integer inverse of a unimodular matrix.
IntMat unimodular_inverse(const IntMat& u);

}  // namespace trop
