#include "trop/amoeba.hpp"

#include "trop/ratlin.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cassert>
#include <cmath>

namespace trop {

LaurentPoly build_flm(const TropicalPolynomial& p, int l, int m) {
  if (p.terms.size() < 2) throw InputError("need at least two terms");
  if (l < 1 || m < 1) throw InputError("l and m must be positive");
  LaurentPoly f;
  f.n = p.n;
  for (const auto& [e, c] : p.terms) {
    LaurentTerm term;
    term.exponent.resize(p.n);
    for (int i = 0; i < p.n; ++i) term.exponent[i] = Int(m) * e[i];
    term.coeff = std::exp(double(l) * c.get_d());
    f.terms.push_back(std::move(term));
  }
  return f;
}

namespace {

std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& coeffs) {
  // coeffs[k] multiplies z^k; leading coefficient nonzero.
  int deg = int(coeffs.size()) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

std::complex<double> ipow(std::complex<double> z, long e) {
  if (e == 0) return {1.0, 0.0};
  if (e < 0) return 1.0 / ipow(z, -e);
  std::complex<double> r{1.0, 0.0};
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

AmoebaSample sample_amoeba(const LaurentPoly& f, int grid, const Window& window) {
  if (f.n != 2) throw InputError("amoeba sampling is implemented for n = 2");
  if (grid < 2) throw InputError("grid must be at least 2");

  AmoebaSample sample;
  sample.t = std::exp(1.0);
  sample.source = "fiberwise roots over a " + std::to_string(grid) + "x" +
                  std::to_string(grid) + " (modulus, phase) grid";

  long e2_min = 0, e2_max = 0;
  bool first = true;
  for (const auto& term : f.terms) {
    long e2 = term.exponent[1].get_si();
    e2_min = first ? e2 : std::min(e2_min, e2);
    e2_max = first ? e2 : std::max(e2_max, e2);
    first = false;
  }

  const double tau = 2.0 * std::acos(-1.0);
  for (int gi = 0; gi < grid; ++gi) {
    double x1 = window.lo + (window.hi - window.lo) * double(gi) / double(grid - 1);
    double r1 = std::exp(x1);
    for (int gj = 0; gj < grid; ++gj) {
      double phi = tau * double(gj) / double(grid);
      std::complex<double> z1 = std::polar(r1, phi);

      // Collapse to a univariate polynomial in z2 (shifted by e2_min).
      std::vector<std::complex<double>> coeffs(std::size_t(e2_max - e2_min + 1), {0.0, 0.0});
      for (const auto& term : f.terms) {
        long a1 = term.exponent[0].get_si();
        long a2 = term.exponent[1].get_si();
        coeffs[std::size_t(a2 - e2_min)] += term.coeff * ipow(z1, a1);
      }
      double magnitude = 0.0;
      for (const auto& c : coeffs) magnitude = std::max(magnitude, std::abs(c));
      if (magnitude == 0.0) {
        ++sample.skipped_fibers;
        continue;
      }
      while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-14 * magnitude) coeffs.pop_back();
      if (coeffs.size() < 2) continue;  // no roots in this fiber

      for (const auto& z2 : poly_roots(coeffs)) {
        if (!(std::abs(z2) > 0.0) || !std::isfinite(std::abs(z2))) continue;
        // Relative residual of the full Laurent polynomial at (z1, z2).
        std::complex<double> value{0.0, 0.0};
        double scale = 0.0;
        for (const auto& term : f.terms) {
          std::complex<double> t =
              term.coeff * ipow(z1, term.exponent[0].get_si()) * ipow(z2, term.exponent[1].get_si());
          value += t;
          scale = std::max(scale, std::abs(t));
        }
        if (scale == 0.0 || std::abs(value) > 1e-6 * scale) continue;
        std::vector<double> pt{x1, std::log(std::abs(z2))};
        if (window.inside(pt)) sample.points.push_back(std::move(pt));
      }
    }
  }
  return sample;
}

AmoebaSample rescale(AmoebaSample sample, int m) {
  if (m < 1) throw InputError("m must be positive");
  for (auto& pt : sample.points)
    for (auto& c : pt) c /= double(m);
  sample.t = std::pow(sample.t, double(m));
  return sample;
}

namespace {

// Distance helpers for one polyhedral face: orthogonal projection onto the
// affine hull, kept only when it lands inside the face.
struct FaceProjector {
  const Polyhedron* face;
  RatVec base;
  std::vector<IntVec> dirs;   // direction lattice basis
  RatMat gram_inv;            // (D^t D)^{-1}, empty for points

  // doubles for the fast scan
  std::vector<double> base_d;
  std::vector<std::vector<double>> dirs_d;
  std::vector<std::vector<double>> gram_inv_d;
};

FaceProjector make_projector(const Polyhedron& face) {
  FaceProjector fp;
  fp.face = &face;
  fp.base = face.vertices[0];
  fp.dirs = direction_lattice(face).vectors;
  int k = int(fp.dirs.size());
  if (k > 0) {
    RatMat gram(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) gram.at(i, j) = Rat(dot(fp.dirs[i], fp.dirs[j]));
    fp.gram_inv = rat_inverse(gram);
  }
  fp.base_d.resize(fp.base.size());
  for (std::size_t i = 0; i < fp.base.size(); ++i) fp.base_d[i] = fp.base[i].get_d();
  for (const auto& d : fp.dirs) {
    std::vector<double> dd(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) dd[i] = d[i].get_d();
    fp.dirs_d.push_back(std::move(dd));
  }
  fp.gram_inv_d.assign(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) fp.gram_inv_d[i][j] = fp.gram_inv.at(i, j).get_d();
  return fp;
}

// Fast approximate squared distance; infinity when the projection leaves
// the face (the containment test itself runs on doubles here).
double approx_dist2(const FaceProjector& fp, const std::vector<double>& x) {
  int n = int(x.size());
  int k = int(fp.dirs.size());
  std::vector<double> rel(n);
  for (int i = 0; i < n; ++i) rel[i] = x[i] - fp.base_d[i];
  std::vector<double> y(n);
  if (k == 0) {
    y.assign(fp.base_d.begin(), fp.base_d.end());
  } else {
    std::vector<double> rhs(k, 0.0), lambda(k, 0.0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) rhs[i] += fp.dirs_d[i][j] * rel[j];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lambda[i] += fp.gram_inv_d[i][j] * rhs[j];
    for (int i = 0; i < n; ++i) {
      y[i] = fp.base_d[i];
      for (int j = 0; j < k; ++j) y[i] += lambda[j] * fp.dirs_d[j][i];
    }
  }
  for (const auto& hs : fp.face->hrep) {
    double lhs = 0.0;
    for (int i = 0; i < n; ++i) lhs += hs.normal[i].get_d() * y[i];
    double off = hs.offset.get_d();
    if (hs.kind == RelKind::Inequality && lhs < off - 1e-9) return -1.0;
  }
  double d2 = 0.0;
  for (int i = 0; i < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
  return d2;
}

// Exact squared distance to one face; nullopt when the projection leaves it.
std::optional<Rat> exact_dist2(const FaceProjector& fp, const RatVec& x) {
  int n = int(x.size());
  int k = int(fp.dirs.size());
  RatVec y(n);
  if (k == 0) {
    y = fp.base;
  } else {
    RatVec rel(n);
    for (int i = 0; i < n; ++i) rel[i] = x[i] - fp.base[i];
    RatVec rhs(k, Rat(0)), lambda(k, Rat(0));
    for (int i = 0; i < k; ++i) rhs[i] = dot(fp.dirs[i], rel);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lambda[i] += fp.gram_inv.at(i, j) * rhs[j];
    for (int i = 0; i < n; ++i) {
      y[i] = fp.base[i];
      for (int j = 0; j < k; ++j) y[i] += lambda[j] * Rat(fp.dirs[j][i]);
    }
  }
  if (!fp.face->contains(y)) return std::nullopt;
  Rat d2 = 0;
  for (int i = 0; i < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
  return d2;
}

}  // namespace

double one_sided_hausdorff(const AmoebaSample& sample, const WeightedComplex& complex,
                           const Window& window) {
  if (sample.points.empty()) throw InputError("empty sample");
  int n = complex.ambient;
  for (const auto& pt : sample.points)
    if (int(pt.size()) != n) throw InputError("sample/cycle dimension mismatch");

  std::vector<FaceProjector> projectors;
  std::vector<Polyhedron> storage;
  for (const auto& cell : complex.cells)
    for (int d = 0; d <= cell.poly.dim; ++d)
      for (auto& f : faces(cell.poly, d)) storage.push_back(std::move(f));
  for (const auto& f : storage) projectors.push_back(make_projector(f));

  // Fast scan for the farthest point, then one exact evaluation.
  double best = -1.0;
  const std::vector<double>* arg = nullptr;
  int used = 0;
  for (const auto& pt : sample.points) {
    if (!window.inside(pt)) continue;
    ++used;
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& fp : projectors) {
      double d2 = approx_dist2(fp, pt);
      if (d2 >= 0.0) dmin = std::min(dmin, d2);
    }
    if (dmin > best) {
      best = dmin;
      arg = &pt;
    }
  }
  if (used == 0) throw InputError("empty sample");
  assert(arg != nullptr);

  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = Rat((*arg)[i]);  // exact binary rational
  std::optional<Rat> exact;
  for (const auto& fp : projectors) {
    auto d2 = exact_dist2(fp, x);
    if (d2 && (!exact || *d2 < *exact)) exact = d2;
  }
  assert(exact && "every face projector rejected the farthest point");
  return std::sqrt(exact->get_d());
}

}  // namespace trop
