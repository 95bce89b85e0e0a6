#include "trop/toric.hpp"

#include <cassert>

namespace trop {

IntVec Binomial::exponent() const {
  IntVec xi(xi_plus.size());
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = xi_plus[i] - xi_minus[i];
  return xi;
}

namespace {

Rat mod_one(Rat x) {
  Int q = fdiv(x.get_num(), x.get_den());
  return x - Rat(q);
}

}  // namespace

BinomialSystem binomial_system(const LatticeBasis& basis, const std::vector<Rat>& phases) {
  if (!is_saturated(basis)) throw InputError("basis not saturated");
  int n = basis.ambient;
  LatticeBasis kernel = kernel_lattice(basis.matrix());

  IntMat completion = complete_to_unimodular(basis);
  int extra = n - basis.rank();
  if (!phases.empty() && int(phases.size()) != extra)
    throw InputError("need one phase angle per completion column");

  BinomialSystem sys;
  sys.ambient = n;
  for (const auto& xi : kernel.vectors) {
    Binomial b;
    b.xi_plus.assign(n, Int(0));
    b.xi_minus.assign(n, Int(0));
    for (int i = 0; i < n; ++i)
      (xi[i] >= 0 ? b.xi_plus[i] : b.xi_minus[i]) = xi[i] >= 0 ? xi[i] : Int(-xi[i]);
    b.phase = 0;
    for (int k = 0; k < int(phases.size()); ++k)
      b.phase += phases[k] * Rat(dot(completion.column(basis.rank() + k), xi));
    b.phase = mod_one(b.phase);
    sys.binomials.push_back(std::move(b));
  }
  return sys;
}

Int projective_degree(const Binomial& b) {
  Int plus = 0, minus = 0;
  for (const auto& x : b.xi_plus) plus += x;
  for (const auto& x : b.xi_minus) minus += x;
  return plus > minus ? plus : minus;
}

Binomial scaled(const Binomial& b, const Int& m) {
  assert(m >= 1);
  Binomial out = b;
  for (auto& x : out.xi_plus) x *= m;
  for (auto& x : out.xi_minus) x *= m;
  return out;
}

}  // namespace trop
