#include "trop/current.hpp"

#include <cassert>

namespace trop {

std::vector<CurrentFrame> build_frames(const FacetStar& star) {
  std::vector<CurrentFrame> frames;
  for (const auto& br : star.branches) {
    LatticeBasis basis{star.ambient, star.frame};
    basis.vectors.push_back(br.inward);
    CurrentFrame frame;
    frame.cell = br.cell;
    frame.base = star.base;
    frame.basis = basis.matrix();
    frame.completion = complete_to_unimodular(basis);
    Int det = determinant(frame.completion);
    assert(det == 1 || det == -1);
    frames.push_back(std::move(frame));
  }
  return frames;
}

Rat boundary_pairing(const FacetStar& star, const std::vector<CurrentFrame>& frames,
                     const PairingQuery& query) {
  int n = star.ambient;
  int p = star.dim;
  if (int(query.rows.size()) != p) throw InputError("row set J must have exactly p indices");
  if (int(query.nu.size()) != n) throw InputError("frequency nu must have length n");
  assert(frames.size() == star.branches.size());

  Rat total = 0;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const IntMat& d = frames[i].completion;
    bool killed = false;
    for (int c = 0; c < n && !killed; ++c)
      killed = dot(query.nu, d.column(c)) != 0;  // any Kronecker factor vanishes
    if (killed) continue;
    total += Rat(star.branches[i].weight * minor_det(frames[i].basis, query.rows));
  }
  return total;
}

ClosednessReport closedness_certificate(const WeightedComplex& complex) {
  ClosednessReport report;
  report.closed = true;
  IntVec zero(complex.ambient, Int(0));
  auto row_sets = index_subsets(complex.ambient, complex.dim);
  for (int fi = 0; fi < int(complex.facets.size()); ++fi) {
    FacetStar star = facet_star(complex, fi);
    std::vector<CurrentFrame> frames = build_frames(star);
    bool ok = true;
    for (const auto& rows : row_sets) {
      Rat value = boundary_pairing(star, frames, PairingQuery{zero, rows});
      if (value != 0) {
        ok = false;
        report.witnesses.push_back(ClosednessWitness{fi, rows, value});
      }
    }
    report.facet_closed.push_back(ok);
    report.closed = report.closed && ok;
  }
  report.matches_balancing = report.closed == is_balanced(complex).balanced;
  return report;
}

RigiditySystem rigidity_system(const FacetStar& star) {
  RigiditySystem sys;
  sys.row_sets = index_subsets(star.ambient, star.dim);
  int s = int(star.branches.size());
  sys.matrix = RatMat(int(sys.row_sets.size()), s);
  for (int c = 0; c < s; ++c) {
    std::vector<IntVec> cols = star.frame;
    cols.push_back(star.branches[c].inward);
    IntMat m = IntMat::from_columns(cols, star.ambient);
    for (int r = 0; r < int(sys.row_sets.size()); ++r)
      sys.matrix.at(r, c) = Rat(minor_det(m, sys.row_sets[r]));
  }
  sys.kernel = rat_kernel(sys.matrix);
  sys.kernel_dim = int(sys.kernel.size());
  return sys;
}

int rigidity_dimension(const FacetStar& star) { return rigidity_system(star).kernel_dim; }

FourierCheck fourier_obstruction(const FacetStar& star, const std::vector<CurrentFrame>& frames,
                                 const IntVec& ell) {
  int n = star.ambient;
  int p = star.dim;
  if (int(ell.size()) != n - p) throw InputError("frequency ell must have length n-p");
  if (is_zero(ell)) throw InputError("zero frequency handled by rigidity_dimension");
  assert(frames.size() == star.branches.size());

  FourierCheck check;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    // D^t nu = (0,...,0, -ell); integral and unique since D is unimodular.
    IntMat dt_inv = unimodular_inverse(frames[i].completion.transposed());
    IntVec target(n, Int(0));
    for (int j = 0; j < n - p; ++j) target[p + j] = -ell[j];
    IntVec nu = dt_inv * target;
    bool obstructed = false;
    for (std::size_t k = 0; k < star.branches.size() && !obstructed; ++k) {
      if (k == i) continue;
      obstructed = dot(nu, star.branches[k].inward) != 0;
    }
    check.nu.push_back(std::move(nu));
    check.obstructed.push_back(obstructed);
  }
  check.all_obstructed = true;
  for (bool b : check.obstructed) check.all_obstructed = check.all_obstructed && b;
  return check;
}

FourierCertificate fourier_certificate(const FacetStar& star,
                                       const std::vector<CurrentFrame>& frames,
                                       std::vector<IntVec> frequencies) {
  FourierCertificate cert;
  cert.frequencies =
      frequencies.empty() ? default_frequencies(star.ambient - star.dim) : std::move(frequencies);
  cert.all_obstructed = true;
  for (const auto& ell : cert.frequencies) {
    cert.checks.push_back(fourier_obstruction(star, frames, ell));
    cert.all_obstructed = cert.all_obstructed && cert.checks.back().all_obstructed;
  }
  return cert;
}

std::vector<IntVec> default_frequencies(int k) {
  std::vector<IntVec> out;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      IntVec v(k, Int(0));
      v[i] += 1;
      v[j] += 1;
      out.push_back(std::move(v));
    }
  for (int i = 0; i < k; ++i) {
    IntVec v(k, Int(0));
    v[i] = 1;
    out.push_back(std::move(v));
  }
  sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace trop
