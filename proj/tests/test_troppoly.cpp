#include "trop/tropical_poly.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <map>

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

TropicalPolynomial line_poly() {
  return make_polynomial(2, {{iv({0, 0}), Rat(0)}, {iv({1, 0}), Rat(0)}, {iv({0, 1}), Rat(0)}});
}

TropicalPolynomial rand_poly(std::mt19937_64& rng, int n, int terms, int exp_hi = 3, int coef_hi = 3) {
  for (;;) {
    std::map<IntVec, Rat> acc;
    for (int i = 0; i < terms; ++i) {
      IntVec e = troptest::rand_vector(rng, n, 0, exp_hi);
      Rat c = make_rat(troptest::rand_int(rng, -coef_hi, coef_hi),
                       troptest::rand_int(rng, 1, 3));
      acc.emplace(std::move(e), std::move(c));
    }
    if (int(acc.size()) < 2) continue;
    std::vector<std::pair<IntVec, Rat>> ts(acc.begin(), acc.end());
    return make_polynomial(n, std::move(ts));
  }
}

}  // namespace

TEST_CASE("evaluate: value and argmax") {
  TropicalPolynomial p = line_poly();
  auto e0 = evaluate(p, rv({0, 0}));
  CHECK(e0.value == 0);
  CHECK(e0.argmax.size() == 3);

  auto e1 = evaluate(p, rv({2, 1}));
  CHECK(e1.value == 2);
  REQUIRE(e1.argmax.size() == 1);
  CHECK(e1.argmax[0] == iv({1, 0}));

  auto e2 = evaluate(p, rv({-1, -1}));
  CHECK(e2.value == 0);
  REQUIRE(e2.argmax.size() == 1);
  CHECK(e2.argmax[0] == iv({0, 0}));
}

TEST_CASE("hypersurface of the tropical line") {
  WeightedComplex c = hypersurface(line_poly());
  CHECK(c.dim == 1);
  REQUIRE(c.cells.size() == 3);
  REQUIRE(c.facets.size() == 1);
  CHECK(c.facets[0].vertices[0] == rv({0, 0}));
  std::vector<IntVec> dirs;
  for (const auto& cell : c.cells) {
    CHECK(cell.weight == 1);
    CHECK(cell.poly.vertices.size() == 1);
    CHECK(cell.poly.vertices[0] == rv({0, 0}));
    REQUIRE(cell.poly.rays.size() == 1);
    dirs.push_back(cell.poly.rays[0]);
  }
  std::sort(dirs.begin(), dirs.end(), [](const IntVec& a, const IntVec& b) { return compare(a, b) < 0; });
  CHECK(dirs == std::vector<IntVec>{iv({-1, 0}), iv({0, -1}), iv({1, 1})});
}

TEST_CASE("hypersurface weight from the dual edge lattice length") {
  // max{0, 2x} on the line: single point {0} with weight 2
  TropicalPolynomial p = make_polynomial(1, {{iv({0}), Rat(0)}, {iv({2}), Rat(0)}});
  WeightedComplex c = hypersurface(p);
  CHECK(c.dim == 0);
  REQUIRE(c.cells.size() == 1);
  CHECK(c.cells[0].poly.vertices[0] == rv({0}));
  CHECK(c.cells[0].weight == 2);
}

TEST_CASE("hypersurface of a product polynomial: the two coordinate lines") {
  TropicalPolynomial p = make_polynomial(
      2, {{iv({0, 0}), Rat(0)}, {iv({1, 0}), Rat(0)}, {iv({0, 1}), Rat(0)}, {iv({1, 1}), Rat(0)}});
  WeightedComplex c = hypersurface(p);
  REQUIRE(c.cells.size() == 4);
  for (const auto& cell : c.cells) CHECK(cell.weight == 1);
  // the support is the union of the two axes: check representative points
  auto on_some_cell = [&](const RatVec& x) {
    for (const auto& cell : c.cells)
      if (cell.poly.contains(x)) return true;
    return false;
  };
  CHECK(on_some_cell(rv({5, 0})));
  CHECK(on_some_cell(rv({-5, 0})));
  CHECK(on_some_cell(rv({0, 5})));
  CHECK(on_some_cell(rv({0, -5})));
  CHECK(!on_some_cell(rv({1, 1})));
}

TEST_CASE("hypersurface rejects a single term") {
  TropicalPolynomial p = make_polynomial(2, {{iv({1, 2}), Rat(5)}});
  CHECK_THROWS_WITH_AS(hypersurface(p), "affine function; empty hypersurface", InputError);
}

TEST_CASE("every hypersurface is balanced") {
  std::mt19937_64 rng(0x5eed0301);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 1 + iter % 3;
    TropicalPolynomial p = rand_poly(rng, n, 2 + iter % 5);
    WeightedComplex c = hypersurface(p);
    CHECK(is_balanced(c).balanced);
  }
}

TEST_CASE("support correctness: on a cell iff at least two maximizers") {
  std::mt19937_64 rng(0x5eed0302);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 2 + iter % 2;
    TropicalPolynomial p = rand_poly(rng, n, 3 + iter % 4);
    WeightedComplex c = hypersurface(p);
    for (int probe = 0; probe < 20; ++probe) {
      RatVec x(n);
      for (auto& coord : x)
        coord = make_rat(troptest::rand_int(rng, -12, 12), troptest::rand_int(rng, 1, 4));
      bool on_cell = false;
      for (const auto& cell : c.cells)
        if (cell.poly.contains(x)) {
          on_cell = true;
          break;
        }
      CHECK(on_cell == (evaluate(p, x).argmax.size() >= 2));
    }
  }
}

TEST_CASE("evaluation is convex along segments") {
  std::mt19937_64 rng(0x5eed0303);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 1 + iter % 3;
    TropicalPolynomial p = rand_poly(rng, n, 2 + iter % 5);
    RatVec x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = make_rat(troptest::rand_int(rng, -8, 8), troptest::rand_int(rng, 1, 3));
      y[i] = make_rat(troptest::rand_int(rng, -8, 8), troptest::rand_int(rng, 1, 3));
    }
    Rat t = make_rat(troptest::rand_int(rng, 0, 4), 4);
    RatVec mid(n);
    for (int i = 0; i < n; ++i) mid[i] = t * x[i] + (1 - t) * y[i];
    Rat lhs = evaluate(p, mid).value;
    Rat rhs = t * evaluate(p, x).value + (1 - t) * evaluate(p, y).value;
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("dual subdivision of pinned examples") {
  SUBCASE("line: one triangle") {
    DualSubdivision sub = dual_subdivision(line_poly());
    REQUIRE(sub.cells.size() == 1);
    CHECK(sub.cells[0].size() == 3);
  }
  SUBCASE("square split along a diagonal by the lifting") {
    TropicalPolynomial p = make_polynomial(2, {{iv({0, 0}), Rat(0)},
                                               {iv({1, 0}), Rat(0)},
                                               {iv({0, 1}), Rat(0)},
                                               {iv({1, 1}), Rat(-1)}});
    DualSubdivision sub = dual_subdivision(p);
    REQUIRE(sub.cells.size() == 2);
    CHECK(sub.cells[0].size() == 3);
    CHECK(sub.cells[1].size() == 3);
  }
  SUBCASE("single term: one 0-cell") {
    TropicalPolynomial p = make_polynomial(2, {{iv({2, 5}), Rat(1)}});
    DualSubdivision sub = dual_subdivision(p);
    REQUIRE(sub.cells.size() == 1);
    CHECK(sub.cells[0] == std::vector<IntVec>{iv({2, 5})});
  }
}

TEST_CASE("duality: vertices of the corner locus match full-dimensional dual cells") {
  std::mt19937_64 rng(0x5eed0304);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 2 + iter % 2;
    TropicalPolynomial p = rand_poly(rng, n, 3 + iter % 4);
    WeightedComplex c = hypersurface(p);

    std::vector<RatVec> vertices;
    for (const auto& cell : c.cells)
      for (const auto& f : faces(cell.poly, 0)) {
        bool dup = false;
        for (const auto& q : vertices)
          if (compare(q, f.vertices[0]) == 0) dup = true;
        if (!dup) vertices.push_back(f.vertices[0]);
      }

    DualSubdivision sub = dual_subdivision(p);
    int full = 0;
    for (const auto& cell : sub.cells) {
      std::vector<RatVec> pts;
      for (const auto& e : cell) pts.push_back(to_rat(e));
      if (from_generators(pts, {}).dim == n) ++full;
    }
    CHECK(int(vertices.size()) == full);

    // each top cell is orthogonal to its dual edge
    for (const auto& cell : c.cells) {
      Evaluation ev = evaluate(p, relative_interior_point(cell.poly));
      REQUIRE(ev.argmax.size() >= 2);
      IntVec edge(n);
      for (int i = 0; i < n; ++i) edge[i] = ev.argmax[1][i] - ev.argmax[0][i];
      for (const auto& dir : direction_lattice(cell.poly).vectors) CHECK(dot(edge, dir) == 0);
    }
  }
}

TEST_CASE("tropical product and translation") {
  TropicalPolynomial p = line_poly();
  TropicalPolynomial q = tropical_product(p, p);
  CHECK(q.terms.size() == 6);  // exponents of the degree-2 triangle
  // coinciding monomials keep the larger coefficient
  TropicalPolynomial a = make_polynomial(1, {{iv({0}), Rat(0)}, {iv({1}), Rat(0)}});
  TropicalPolynomial b = make_polynomial(1, {{iv({0}), Rat(3)}, {iv({1}), Rat(-3)}});
  TropicalPolynomial ab = tropical_product(a, b);
  REQUIRE(ab.terms.size() == 3);
  CHECK(ab.terms[1].first == iv({1}));
  CHECK(ab.terms[1].second == 3);  // max(0 + 3, 0 + -3)

  RatVec shift = rv({1, 2});
  TropicalPolynomial moved = translate(p, shift);
  auto ev = evaluate(moved, rv({1, 2}));
  CHECK(ev.argmax.size() == 3);  // the corner moved to (1,2)
}
