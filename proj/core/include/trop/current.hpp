// The combinatorial side of tropical currents: per-cell lattice frames
// (a_P, B_P, D_P), the exact boundary pairing against character test
// forms, the closedness certificate, the rigidity system whose
// one-dimensional kernel certifies local strong extremality, and the
// higher-frequency obstruction check.
//
// The pairing of the exterior derivative against the test form indexed by
// a frequency nu and a row set J collapses to
//
//   sum_P m_P [prod_l d0(<nu,w_l>)] d0(<nu,v_P>) [prod_j d0(<nu,u_j^P>)]
//          * Det_J(w_1,...,w_{p-1}, v_P)
//
// with d0 the Kronecker delta at zero; the normalization constant of the
// radial factor is fixed to 1.

#pragma once

#include "trop/complex.hpp"
#include "trop/ratlin.hpp"

namespace trop {

struct CurrentFrame {
  int cell = -1;
  RatVec base;       // a_P, the star's base point
  IntMat basis;      // B_P: n x p, columns (w_1..w_{p-1}, v_P)
  IntMat completion; // D_P in GL(n, Z) extending basis
};

std::vector<CurrentFrame> build_frames(const FacetStar& star);

struct PairingQuery {
  IntVec nu;              // character frequency, length n
  std::vector<int> rows;  // J: 0-based sorted row indices, |J| = p
};

Rat boundary_pairing(const FacetStar& star, const std::vector<CurrentFrame>& frames,
                     const PairingQuery& query);

struct ClosednessWitness {
  int facet = -1;
  std::vector<int> rows;
  Rat value;
};

struct ClosednessReport {
  bool closed = false;
  std::vector<bool> facet_closed;
  std::vector<ClosednessWitness> witnesses;
  bool matches_balancing = false;  // cross-check against is_balanced
};

// Zero-frequency pairing at every facet and every row set J.
ClosednessReport closedness_certificate(const WeightedComplex& complex);

struct RigiditySystem {
  std::vector<std::vector<int>> row_sets;  // all J with |J| = p
  RatMat matrix;                           // entry (J, branch) = Det_J(w, v_P)
  int kernel_dim = 0;
  std::vector<RatVec> kernel;              // rational kernel basis
};

RigiditySystem rigidity_system(const FacetStar& star);
int rigidity_dimension(const FacetStar& star);

struct FourierCheck {
  std::vector<IntVec> nu;        // solved frequency per branch
  std::vector<bool> obstructed;  // some other branch pairs nontrivially
  bool all_obstructed = false;
};

// For a nonzero frequency ell in Z^{n-p}, solves per branch the unimodular
// system <nu, w_l> = 0, <nu, v_P> = 0, <nu, u_j^P> = -ell_j and reports
// whether another branch kills the corresponding Fourier coefficient.
FourierCheck fourier_obstruction(const FacetStar& star, const std::vector<CurrentFrame>& frames,
                                 const IntVec& ell);

// Default test set: unit vectors and their pairwise sums (height <= 2).
std::vector<IntVec> default_frequencies(int k);

struct FourierCertificate {
  std::vector<IntVec> frequencies;   // which ell were checked
  std::vector<FourierCheck> checks;  // parallel to frequencies
  bool all_obstructed = false;
};

// Runs fourier_obstruction over a frequency set (default_frequencies(n-p)
// when none is given) and records the outcomes.
FourierCertificate fourier_certificate(const FacetStar& star,
                                       const std::vector<CurrentFrame>& frames,
                                       std::vector<IntVec> frequencies = {});

}  // namespace trop
