// Weighted rational polyhedral complexes of pure dimension p, their facet
// stars, the balancing-condition checker and the strong-extremality
// checker.
//
// At a facet W with adjacent cells P and weights m_P, balance means the
// weighted sum of compatible inward primitive vectors is parallel to W:
// every p x p minor of (w_1 ... w_{p-1} | sum m_P v_P) vanishes,
// equivalently the sum dies under the integral projection along W.

#pragma once

#include "trop/polyhedron.hpp"

namespace trop {

struct WeightedCell {
  Polyhedron poly;
  Int weight;  // nonzero
};

struct WeightedComplex {
  int ambient = 0;
  int dim = 0;  // p, the pure dimension
  std::vector<WeightedCell> cells;
  std::vector<Polyhedron> facets;            // all (p-1)-faces, deduplicated
  std::vector<std::vector<int>> incidence;   // facet index -> adjacent cell indices
};

// Validates purity, nonzero weights and the pairwise common-face property,
// then enumerates facets and incidence.  Throws InputError with "not pure"
// or "not a complex" on violations.
WeightedComplex build_complex(std::vector<WeightedCell> cells);

struct Branch {
  int cell = -1;
  Int weight;
  IntVec inward;  // primitive v_P; {frame, v_P} is a Z-basis of H_P /\ Z^n
};

struct FacetStar {
  int ambient = 0;
  int dim = 0;        // p of the surrounding complex
  int facet = -1;     // index into the complex's facet list (-1 when synthetic)
  Polyhedron w;       // the facet itself
  RatVec base;        // point in relint(W)
  std::vector<IntVec> frame;  // saturated basis w_1..w_{p-1} of dir(W)
  std::vector<Branch> branches;
};

FacetStar facet_star(const WeightedComplex& complex, int facet_index);

// Integer (n-p+1) x n matrix whose kernel lattice is the direction lattice
// of the star's facet (rows of the inverse of a unimodular completion of
// the frame).
IntMat projection_along(const FacetStar& star);

struct FacetBalance {
  int facet = -1;
  bool balanced = false;
  IntVec weighted_sum;                    // sum m_P v_P
  IntVec defect;                          // its image under projection_along
  std::vector<std::vector<int>> failing_minors;  // row index sets J (0-based)
};

struct BalanceReport {
  bool balanced = false;
  std::vector<FacetBalance> facets;
};

BalanceReport is_balanced(const WeightedComplex& complex);

// Every proper subset linearly independent.
bool sub_independent(const std::vector<IntVec>& vectors);

struct StarCheck {
  int facet = -1;
  int valency = 0;
  bool valency_ok = false;
  bool subindependent = false;
  bool spanning = false;
};

struct ExtremalityReport {
  bool balanced = false;          // context: checks are meaningful on cycles
  bool connected = false;
  int components = 0;
  bool valency_ok = false;
  bool stars_ok = false;          // sub-independence and spanning everywhere
  std::vector<StarCheck> stars;
  bool strongly_extremal = false;
};

ExtremalityReport is_strongly_extremal(const WeightedComplex& complex);

// All strictly increasing index subsets of {0..n-1} of size k.
std::vector<std::vector<int>> index_subsets(int n, int k);

}  // namespace trop
