// JSON document formats: weighted cycles, tropical polynomials, lattice
// bases.  Rationals travel as strings "a/b" so nothing is ever rounded;
// rays, exponents and weights are bare integers.

#pragma once

#include "trop/complex.hpp"
#include "trop/lattice.hpp"
#include "trop/tropical_poly.hpp"

#include <string>

namespace trop {

// {"ambient": n, "dim": p, "cells": [{"vertices": [["a/b",...]],
//  "rays": [[int,...]], "weight": int}, ...]}
WeightedComplex parse_cycle(const std::string& text);
std::string write_cycle(const WeightedComplex& complex);

// {"n": n, "terms": [{"exp": [int,...], "coef": "a/b"}, ...]}
TropicalPolynomial parse_polynomial(const std::string& text);
std::string write_polynomial(const TropicalPolynomial& p);

// {"ambient": n, "vectors": [[int,...], ...], "phases": ["a/b", ...]}
struct BasisDocument {
  LatticeBasis basis;
  std::vector<Rat> phases;
};
BasisDocument parse_basis(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace trop
