#include "trop/current.hpp"

#include "trop/tropical_poly.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace trop;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

WeightedComplex tropical_line(std::array<long, 3> weights = {1, 1, 1}) {
  std::vector<WeightedCell> cells;
  std::vector<IntVec> dirs{iv({1, 1}), iv({-1, 0}), iv({0, -1})};
  int i = 0;
  for (const auto& d : dirs)
    cells.push_back(WeightedCell{from_generators({rv({0, 0})}, {d}), Int(weights[i++])});
  return build_complex(std::move(cells));
}

}  // namespace

TEST_CASE("build_frames produces unimodular completions extending the basis") {
  WeightedComplex line = tropical_line();
  FacetStar star = facet_star(line, 0);
  std::vector<CurrentFrame> frames = build_frames(star);
  REQUIRE(frames.size() == 3);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    CHECK(frames[i].basis.column(0) == star.branches[i].inward);
    CHECK(frames[i].completion.column(0) == star.branches[i].inward);
    Int det = determinant(frames[i].completion);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("build_frames in one dimension") {
  std::vector<WeightedCell> cells;
  cells.push_back(WeightedCell{from_generators({rv({0}), rv({2})}, {}), Int(1)});
  WeightedComplex c = build_complex(std::move(cells));
  FacetStar star = facet_star(c, 0);
  std::vector<CurrentFrame> frames = build_frames(star);
  REQUIRE(frames.size() == 1);
  CHECK(frames[0].completion == IntMat::identity(1));
}

TEST_CASE("build_frames for p = 2 in R^3") {
  FacetStar star = troptest::make_star(3, {iv({0, 0, 1})}, {iv({1, 0, 0})});
  std::vector<CurrentFrame> frames = build_frames(star);
  REQUIRE(frames.size() == 1);
  CHECK(frames[0].completion.column(0) == iv({0, 0, 1}));
  CHECK(frames[0].completion.column(1) == iv({1, 0, 0}));
  Int det = determinant(frames[0].completion);
  CHECK((det == 1 || det == -1));
}

TEST_CASE("boundary pairing on the tropical line star") {
  WeightedComplex line = tropical_line();
  FacetStar star = facet_star(line, 0);
  std::vector<CurrentFrame> frames = build_frames(star);

  SUBCASE("zero frequency reproduces the balancing sum per row") {
    CHECK(boundary_pairing(star, frames, PairingQuery{iv({0, 0}), {0}}) == 0);
    CHECK(boundary_pairing(star, frames, PairingQuery{iv({0, 0}), {1}}) == 0);
  }
  SUBCASE("nonzero frequency is killed by some Kronecker factor") {
    CHECK(boundary_pairing(star, frames, PairingQuery{iv({1, 0}), {0}}) == 0);
    CHECK(boundary_pairing(star, frames, PairingQuery{iv({1, 0}), {1}}) == 0);
    CHECK(boundary_pairing(star, frames, PairingQuery{iv({0, 1}), {0}}) == 0);
  }
  SUBCASE("row set must have size p") {
    CHECK_THROWS_AS(boundary_pairing(star, frames, PairingQuery{iv({0, 0}), {0, 1}}), InputError);
  }
}

TEST_CASE("boundary pairing witnesses imbalance") {
  WeightedComplex bad = tropical_line({2, 1, 1});
  FacetStar star = facet_star(bad, 0);
  std::vector<CurrentFrame> frames = build_frames(star);
  // the branch order in the star follows cell order: (1,1), (-1,0), (0,-1)
  CHECK(boundary_pairing(star, frames, PairingQuery{iv({0, 0}), {0}}) == 1);
  CHECK(boundary_pairing(star, frames, PairingQuery{iv({0, 0}), {1}}) == 1);
}

TEST_CASE("pairing vanishes for nonzero frequencies on random stars") {
  std::mt19937_64 rng(0x5eed0501);
  for (int iter = 0; iter < 40; ++iter) {
    troptest::StarComplexSpec spec;
    spec.n = 2 + iter % 3;
    spec.p = 1 + iter % (spec.n - 1 > 0 ? spec.n - 1 : 1);
    spec.branch_count = 2 + iter % 3;
    WeightedComplex c = troptest::rand_star_complex(rng, spec);
    FacetStar star = facet_star(c, 0);
    std::vector<CurrentFrame> frames = build_frames(star);
    auto rows = index_subsets(spec.n, spec.p);
    for (int probe = 0; probe < 6; ++probe) {
      IntVec nu = troptest::rand_nonzero_vector(rng, spec.n, -4, 4);
      for (const auto& J : rows)
        CHECK(boundary_pairing(star, frames, PairingQuery{nu, J}) == 0);
    }
  }
}

TEST_CASE("zero-frequency pairing equals the minor of the weighted sum") {
  std::mt19937_64 rng(0x5eed0502);
  for (int iter = 0; iter < 40; ++iter) {
    troptest::StarComplexSpec spec;
    spec.n = 2 + iter % 3;
    spec.p = 1 + iter % (spec.n - 1 > 0 ? spec.n - 1 : 1);
    spec.branch_count = 2 + iter % 4;
    WeightedComplex c = troptest::rand_star_complex(rng, spec);
    FacetStar star = facet_star(c, 0);
    std::vector<CurrentFrame> frames = build_frames(star);

    IntVec weighted_sum(spec.n, Int(0));
    for (const auto& br : star.branches)
      for (int i = 0; i < spec.n; ++i) weighted_sum[i] += br.weight * br.inward[i];
    std::vector<IntVec> cols = star.frame;
    cols.push_back(weighted_sum);
    IntMat m = IntMat::from_columns(cols, spec.n);

    IntVec zero(spec.n, Int(0));
    for (const auto& J : index_subsets(spec.n, spec.p))
      CHECK(boundary_pairing(star, frames, PairingQuery{zero, J}) == Rat(minor_det(m, J)));
  }
}

TEST_CASE("closedness certificate on pinned complexes") {
  SUBCASE("tropical line is certified closed") {
    ClosednessReport r = closedness_certificate(tropical_line());
    CHECK(r.closed);
    CHECK(r.matches_balancing);
    CHECK(r.witnesses.empty());
  }
  SUBCASE("unbalanced weights produce a witness") {
    ClosednessReport r = closedness_certificate(tropical_line({2, 1, 1}));
    CHECK(!r.closed);
    CHECK(r.matches_balancing);
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses[0].facet == 0);
    CHECK(r.witnesses[0].rows == std::vector<int>{0});
    CHECK(r.witnesses[0].value == 1);
  }
  SUBCASE("balanced 2-cycle of three half-planes in R^3") {
    std::vector<WeightedCell> cells;
    for (auto dir : {iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 0})})
      cells.push_back(WeightedCell{
          from_generators({rv({0, 0, 0})}, {iv({0, 0, 1}), iv({0, 0, -1}), dir}), Int(1)});
    WeightedComplex c = build_complex(std::move(cells));
    ClosednessReport r = closedness_certificate(c);
    CHECK(r.closed);
    CHECK(r.matches_balancing);
  }
}

TEST_CASE("hypersurfaces in R^3 are certified closed at every facet") {
  std::mt19937_64 rng(0x5eed0509);
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<std::pair<IntVec, Rat>> terms;
    for (int i = 0; i < 5; ++i) {
      IntVec e = troptest::rand_vector(rng, 3, 0, 2);
      bool dup = false;
      for (const auto& [e2, c2] : terms) dup = dup || compare(e2, e) == 0;
      if (!dup)
        terms.emplace_back(e, make_rat(troptest::rand_int(rng, -4, 4), troptest::rand_int(rng, 1, 2)));
    }
    if (terms.size() < 3) continue;
    WeightedComplex surface = hypersurface(make_polynomial(3, std::move(terms)));
    ClosednessReport r = closedness_certificate(surface);
    CHECK(r.closed);
    CHECK(r.matches_balancing);
  }
}

TEST_CASE("a complex without facets is vacuously certified") {
  std::vector<WeightedCell> cells;
  cells.push_back(WeightedCell{
      from_generators({RatVec{Rat(0), Rat(0)}}, {IntVec{Int(1), Int(0)}, IntVec{Int(-1), Int(0)}}),
      Int(1)});
  WeightedComplex c = build_complex(std::move(cells));
  ClosednessReport r = closedness_certificate(c);
  CHECK(r.closed);
  CHECK(r.matches_balancing);
  CHECK(r.facet_closed.empty());
}

TEST_CASE("certificate matches the balancing checker on random stars") {
  std::mt19937_64 rng(0x5eed0503);
  for (int iter = 0; iter < 60; ++iter) {
    troptest::StarComplexSpec spec;
    spec.n = 2 + iter % 3;
    spec.p = 1 + iter % (spec.n - 1 > 0 ? spec.n - 1 : 1);
    spec.branch_count = 2 + iter % 4;
    spec.force_balanced = iter % 2 == 0;
    WeightedComplex c = troptest::rand_star_complex(rng, spec);
    ClosednessReport r = closedness_certificate(c);
    CHECK(r.matches_balancing);
    CHECK(r.closed == is_balanced(c).balanced);
  }
}

TEST_CASE("rigidity dimension of pinned stars") {
  SUBCASE("tropical line star: dimension 1, kernel along the weights") {
    FacetStar star = troptest::make_star(2, {}, {iv({1, 1}), iv({-1, 0}), iv({0, -1})});
    RigiditySystem sys = rigidity_system(star);
    CHECK(sys.kernel_dim == 1);
    REQUIRE(sys.kernel.size() == 1);
    const RatVec& k = sys.kernel[0];
    CHECK(k[0] == k[1]);
    CHECK(k[1] == k[2]);
    CHECK(k[0] != 0);
  }
  SUBCASE("four-ray star has a two-dimensional kernel") {
    FacetStar star = troptest::make_star(2, {}, {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})});
    CHECK(rigidity_dimension(star) == 2);
  }
  SUBCASE("a single branch is rigid with trivial kernel") {
    FacetStar star = troptest::make_star(2, {}, {iv({1, 0})});
    CHECK(rigidity_dimension(star) == 0);
  }
}

TEST_CASE("the weight vector lies in the rigidity kernel of balanced stars") {
  std::mt19937_64 rng(0x5eed0508);
  for (int iter = 0; iter < 30; ++iter) {
    troptest::StarComplexSpec spec;
    spec.n = 2 + iter % 3;
    spec.p = 1 + iter % (spec.n - 1 > 0 ? spec.n - 1 : 1);
    spec.branch_count = 2 + iter % 3;
    spec.force_balanced = true;
    WeightedComplex c = troptest::rand_star_complex(rng, spec);
    REQUIRE(is_balanced(c).balanced);
    FacetStar star = facet_star(c, 0);
    RigiditySystem sys = rigidity_system(star);
    for (int r = 0; r < sys.matrix.rows; ++r) {
      Rat acc = 0;
      for (int col = 0; col < sys.matrix.cols; ++col)
        acc += sys.matrix.at(r, col) * Rat(star.branches[col].weight);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("rigidity dimension equals the kernel of the projected branch matrix") {
  std::mt19937_64 rng(0x5eed0504);
  for (int iter = 0; iter < 40; ++iter) {
    troptest::StarComplexSpec spec;
    spec.n = 2 + iter % 3;
    spec.p = 1 + iter % (spec.n - 1 > 0 ? spec.n - 1 : 1);
    spec.branch_count = 2 + iter % 4;
    WeightedComplex c = troptest::rand_star_complex(rng, spec);
    FacetStar star = facet_star(c, 0);

    IntMat h = projection_along(star);
    std::vector<IntVec> projected;
    for (const auto& br : star.branches) projected.push_back(h * br.inward);
    RatMat pm = RatMat::from_int_columns(projected, spec.n - spec.p + 1);
    CHECK(rigidity_dimension(star) == int(rat_kernel(pm).size()));
  }
}

TEST_CASE("rigidity dimension is invariant under frame changes") {
  std::mt19937_64 rng(0x5eed0505);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 3 + iter % 2;
    int p = 2 + iter % 2;
    if (p >= n) p = n - 1;
    FacetStar star = troptest::rand_extremal_star(rng, n, p);
    int dim = rigidity_dimension(star);

    // unimodular change of the frame basis
    FacetStar changed = star;
    if (int(star.frame.size()) >= 1) {
      IntMat u = IntMat::identity(int(star.frame.size()));
      for (int ops = 0; ops < 4; ++ops) {
        int i = int(troptest::rand_int(rng, 0, int(star.frame.size()) - 1).get_si());
        int j = int(troptest::rand_int(rng, 0, int(star.frame.size()) - 1).get_si());
        if (i != j) u.add_column_multiple(j, i, troptest::rand_int(rng, -2, 2));
      }
      IntMat fm = IntMat::from_columns(star.frame, n) * u;
      changed.frame = fm.columns();
      CHECK(rigidity_dimension(changed) == dim);
    }
  }
}

TEST_CASE("strongly extremal stars are rigid; duplicated directions are not") {
  std::mt19937_64 rng(0x5eed0506);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 2 + iter % 3;
    int p = 1 + iter % n;
    if (p >= n) p = n - 1;
    if (p < 1) p = 1;
    FacetStar star = troptest::rand_extremal_star(rng, n, p);
    RigiditySystem sys = rigidity_system(star);
    CHECK(sys.kernel_dim == 1);
    REQUIRE(sys.kernel.size() == 1);
    for (std::size_t i = 1; i < star.branches.size(); ++i)
      CHECK(sys.kernel[0][i] == sys.kernel[0][0]);  // kernel follows unit weights

    FacetStar dup = star;
    dup.branches.push_back(dup.branches[0]);
    CHECK(rigidity_dimension(dup) >= 2);
  }
}

TEST_CASE("fourier obstruction on pinned stars") {
  SUBCASE("tropical line with an explicit completion") {
    FacetStar star = troptest::make_star(2, {}, {iv({1, 1}), iv({-1, 0}), iv({0, -1})});
    std::vector<CurrentFrame> frames;
    CurrentFrame f;
    f.cell = 0;
    f.basis = IntMat::from_columns({iv({1, 1})}, 2);
    f.completion = IntMat::from_columns({iv({1, 1}), iv({0, 1})}, 2);
    frames.push_back(f);
    // remaining branches: default completions
    FacetStar rest = troptest::make_star(2, {}, {iv({-1, 0}), iv({0, -1})});
    for (auto& g : build_frames(rest)) frames.push_back(g);

    FourierCheck check = fourier_obstruction(star, frames, iv({1}));
    REQUIRE(check.nu.size() == 3);
    CHECK(check.nu[0] == iv({1, -1}));  // unique solution of the unimodular system
    CHECK(check.obstructed[0]);
    CHECK(check.all_obstructed);
  }
  SUBCASE("four-ray star is obstructed even though rigidity fails") {
    FacetStar star = troptest::make_star(2, {}, {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})});
    std::vector<CurrentFrame> frames = build_frames(star);
    FourierCheck check = fourier_obstruction(star, frames, iv({1}));
    CHECK(check.all_obstructed);
    CHECK(rigidity_dimension(star) == 2);
  }
  SUBCASE("a split line is not obstructed") {
    FacetStar star = troptest::make_star(2, {}, {iv({1, 0}), iv({-1, 0})});
    std::vector<CurrentFrame> frames = build_frames(star);
    FourierCheck check = fourier_obstruction(star, frames, iv({1}));
    CHECK(!check.obstructed[0]);
    CHECK(!check.obstructed[1]);
  }
  SUBCASE("zero frequency is rejected") {
    FacetStar star = troptest::make_star(2, {}, {iv({1, 0}), iv({-1, 0})});
    std::vector<CurrentFrame> frames = build_frames(star);
    CHECK_THROWS_WITH_AS(fourier_obstruction(star, frames, iv({0})),
                         "zero frequency handled by rigidity_dimension", InputError);
  }
}

TEST_CASE("fourier solutions satisfy the defining unimodular system") {
  std::mt19937_64 rng(0x5eed0507);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 2 + iter % 3;
    int p = 1 + iter % n;
    if (p >= n) p = n - 1;
    if (p < 1) p = 1;
    FacetStar star = troptest::rand_extremal_star(rng, n, p);
    std::vector<CurrentFrame> frames = build_frames(star);
    for (const auto& ell : default_frequencies(n - p)) {
      FourierCheck check = fourier_obstruction(star, frames, ell);
      for (std::size_t i = 0; i < frames.size(); ++i) {
        const IntVec& nu = check.nu[i];
        for (const auto& w : star.frame) CHECK(dot(nu, w) == 0);
        CHECK(dot(nu, star.branches[i].inward) == 0);
        for (int j = 0; j < n - p; ++j)
          CHECK(dot(nu, frames[i].completion.column(p + j)) == -ell[j]);
      }
      // extremal stars always pass the higher-frequency step
      CHECK(check.all_obstructed);
    }
  }
}

TEST_CASE("fourier certificate records the checked frequencies") {
  FacetStar star = troptest::make_star(2, {}, {iv({1, 1}), iv({-1, 0}), iv({0, -1})});
  std::vector<CurrentFrame> frames = build_frames(star);
  FourierCertificate cert = fourier_certificate(star, frames);
  CHECK(cert.frequencies == default_frequencies(1));
  CHECK(cert.checks.size() == cert.frequencies.size());
  CHECK(cert.all_obstructed);

  FacetStar split = troptest::make_star(2, {}, {iv({1, 0}), iv({-1, 0})});
  FourierCertificate bad = fourier_certificate(split, build_frames(split));
  CHECK(!bad.all_obstructed);
}

TEST_CASE("default frequency set has height at most two") {
  auto freqs = default_frequencies(2);
  CHECK(freqs.size() == 5);  // e1, e2, e1+e2, 2e1, 2e2
  for (const auto& f : freqs) {
    CHECK(!is_zero(f));
    Int height = 0;
    for (const auto& x : f) height += x;
    CHECK(height <= 2);
  }
}
