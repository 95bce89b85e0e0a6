// Floating-point demonstration of the amoeba approximation mechanism:
// build the exponential-coefficient polynomial family attached to a
// tropical polynomial, sample amoebas of plane curves fiberwise with
// companion-matrix root finding, rescale under the power map, and measure
// the one-sided Hausdorff distance to a tropical cycle on a window.

#pragma once

#include "trop/complex.hpp"
#include "trop/tropical_poly.hpp"

#include <complex>
#include <string>

namespace trop {

struct LaurentTerm {
  IntVec exponent;
  std::complex<double> coeff;
};

struct LaurentPoly {
  int n = 0;
  std::vector<LaurentTerm> terms;
};

// f_{l,m}: coefficient exp(l * c_a) on exponent m * a, per term of p.
LaurentPoly build_flm(const TropicalPolynomial& p, int l, int m);

struct Window {
  double lo = -5.0, hi = 5.0;  // per-axis box [lo,hi]^n

  bool inside(const std::vector<double>& x) const {
    for (double c : x)
      if (c < lo || c > hi) return false;
    return true;
  }
};

struct AmoebaSample {
  std::vector<std::vector<double>> points;  // log-images of sampled roots
  double t = 0.0;                           // base of the logarithm
  std::string source;
  int skipped_fibers = 0;                   // degenerate fibers dropped
};

// Grid of (modulus, phase) fibers for z1; each fiber solves the resulting
// univariate polynomial in z2 and keeps roots whose relative residual is
// below 1e-6.  Plane curves only (n = 2).
AmoebaSample sample_amoeba(const LaurentPoly& f, int grid, const Window& window);

// Divides every point by m (the log-image of the m-th power map pullback).
AmoebaSample rescale(AmoebaSample sample, int m);

// max over sample points in the window of dist(point, |C|), the minimum
// over cells of the exact distance obtained by projecting onto every face.
double one_sided_hausdorff(const AmoebaSample& sample, const WeightedComplex& complex,
                           const Window& window);

}  // namespace trop
