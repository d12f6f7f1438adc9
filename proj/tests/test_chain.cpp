#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pltop/polytope_chain.hpp"

using namespace pltop;
using oracles::pt;
using oracles::ptq;

namespace {

GeomSimplex sx(std::vector<Point> pts) { return make_simplex(std::move(pts)); }

// all 2-faces of the tetrahedron 0,e1,e2,e3
Chain tetra_boundary() {
  const Point a = pt({0, 0, 0}), b = pt({1, 0, 0}), c = pt({0, 1, 0}), d = pt({0, 0, 1});
  Chain ch = make_chain(2, 3);
  ch.toggle(sx({a, b, c}));
  ch.toggle(sx({a, b, d}));
  ch.toggle(sx({a, c, d}));
  ch.toggle(sx({b, c, d}));
  return ch;
}

Chain square_cycle() {
  Chain ch = make_chain(1, 2);
  ch.toggle(sx({pt({0, 0}), pt({1, 0})}));
  ch.toggle(sx({pt({1, 0}), pt({1, 1})}));
  ch.toggle(sx({pt({0, 1}), pt({1, 1})}));
  ch.toggle(sx({pt({0, 0}), pt({0, 1})}));
  return ch;
}

// random c-chain with grid coordinates; simplices are regenerated until
// affinely independent, so the chain is always well formed
Chain random_chain(oracles::Rng& rng, int c, int d, int count) {
  Chain ch = make_chain(c, d);
  int made = 0;
  while (made < count) {
    std::vector<Point> vs;
    for (int i = 0; i <= c; ++i) vs.push_back(rng.point(d, -9, 9));
    try {
      ch.toggle(make_simplex(vs));
      ++made;
    } catch (const input_error&) {
    }
  }
  return ch;
}

}  // namespace

TEST_SUITE_BEGIN("chain");

TEST_CASE("vertices_of") {
  CHECK(vertices_of(make_chain(1, 2)).empty());
  Chain one = make_chain(2, 2);
  one.toggle(sx({pt({0, 0}), pt({1, 0}), pt({0, 1})}));
  CHECK(vertices_of(one).size() == 3);
  Chain two = one;
  two.toggle(sx({pt({1, 0}), pt({0, 1}), pt({1, 1})}));
  CHECK(vertices_of(two).size() == 4);
}

TEST_CASE("boundary") {
  Chain one = make_chain(2, 2);
  one.toggle(sx({pt({0, 0}), pt({1, 0}), pt({0, 1})}));
  CHECK(boundary(one).size() == 3);

  CHECK(boundary(boundary(tetra_boundary())).empty());

  // two triangles sharing one edge: the shared edge cancels
  Chain two = one;
  two.toggle(sx({pt({1, 0}), pt({0, 1}), pt({1, 1})}));
  const Chain bd = boundary(two);
  CHECK(bd.size() == 4);
  CHECK(bd.simplices.count(sx({pt({0, 0}), pt({1, 0})})) == 1);
  CHECK(bd.simplices.count(sx({pt({0, 0}), pt({0, 1})})) == 1);
  CHECK(bd.simplices.count(sx({pt({1, 0}), pt({1, 1})})) == 1);
  CHECK(bd.simplices.count(sx({pt({0, 1}), pt({1, 1})})) == 1);
  CHECK(bd.simplices.count(sx({pt({1, 0}), pt({0, 1})})) == 0);
}

TEST_CASE("is_cycle") {
  CHECK(is_cycle(square_cycle()));
  Chain one = make_chain(1, 2);
  one.toggle(sx({pt({0, 0}), pt({1, 0})}));
  CHECK_FALSE(is_cycle(one));
  CHECK(is_cycle(tetra_boundary()));
}

TEST_CASE("is_simplicial") {
  Chain shared_edge = make_chain(2, 2);
  shared_edge.toggle(sx({pt({0, 0}), pt({1, 0}), pt({0, 1})}));
  shared_edge.toggle(sx({pt({1, 0}), pt({0, 1}), pt({1, 1})}));
  CHECK(is_simplicial(shared_edge));

  Chain overlapping = make_chain(2, 2);
  overlapping.toggle(sx({pt({0, 0}), pt({4, 0}), pt({0, 4})}));
  overlapping.toggle(sx({pt({1, 1}), pt({5, 1}), pt({1, 5})}));
  CHECK_FALSE(is_simplicial(overlapping));

  Chain crossing = make_chain(1, 2);
  crossing.toggle(sx({pt({-1, 0}), pt({1, 0})}));
  crossing.toggle(sx({pt({0, -1}), pt({0, 1})}));
  std::pair<GeomSimplex, GeomSimplex> w;
  CHECK_FALSE(is_simplicial(crossing, &w));
}

TEST_CASE("boundary is additive over symmetric difference") {
  oracles::Rng rng(707);
  for (int t = 0; t < 8; ++t) {
    const int c = 1 + static_cast<int>(rng.below(3));
    const int d = std::max(2, c) + static_cast<int>(rng.below(2));
    const Chain a = random_chain(rng, c, d, 6);
    const Chain b = random_chain(rng, c, d, 6);
    CHECK(boundary(sym_diff(a, b)) == sym_diff(boundary(a), boundary(b)));
    CHECK(boundary(boundary(a)).empty());
  }
}

TEST_CASE("incidence_counts") {
  const Polytope square = hull_of(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  const Polytope bottom = hull_of(2, {pt({0, 0}), pt({1, 0})});
  // single square: its edge is a face and lies in the boundary
  const PolytopeChain ps = make_polytope_chain(2, 2, {square});
  CHECK(incidence_counts(ps, bottom) == std::pair<int, int>{1, 1});

  // two unit squares sharing a full edge: both counts cancel mod 2
  const Polytope right = hull_of(2, {pt({1, 0}), pt({2, 0}), pt({1, 1}), pt({2, 1})});
  const Polytope shared = hull_of(2, {pt({1, 0}), pt({1, 1})});
  const PolytopeChain pp = make_polytope_chain(2, 2, {square, right});
  CHECK(incidence_counts(pp, shared) == std::pair<int, int>{0, 0});

  // disjoint probe
  const Polytope far = hull_of(2, {pt({7, 7}), pt({8, 7})});
  CHECK(incidence_counts(pp, far) == std::pair<int, int>{0, 0});

  CHECK_THROWS_AS(incidence_counts(ps, square), input_error);
}

TEST_CASE("lemma_eq_cycle on the unit square edges") {
  std::vector<Polytope> edges = {
      hull_of(2, {pt({0, 0}), pt({1, 0})}), hull_of(2, {pt({1, 0}), pt({1, 1})}),
      hull_of(2, {pt({0, 1}), pt({1, 1})}), hull_of(2, {pt({0, 0}), pt({0, 1})})};
  const auto out = lemma_eq_cycle(make_polytope_chain(1, 2, edges));
  REQUIRE(out.ok());
  CHECK(out.cycle.size() == 4);
  CHECK(is_cycle(out.cycle));
  CHECK(is_simplicial(out.cycle));
  CHECK(out.cycle == square_cycle());
}

TEST_CASE("lemma_eq_cycle violations") {
  // three edges of the square: odd incidence at the open corners
  std::vector<Polytope> three = {
      hull_of(2, {pt({0, 0}), pt({1, 0})}), hull_of(2, {pt({1, 0}), pt({1, 1})}),
      hull_of(2, {pt({0, 1}), pt({1, 1})})};
  const auto v2 = lemma_eq_cycle(make_polytope_chain(1, 2, three));
  REQUIRE(v2.status == LemmaEqOutcome::Status::hyp2_violation);
  CHECK(v2.offending_cell.dim == 0);
  const Point corner = v2.offending_cell.verts[0];
  CHECK((corner == pt({0, 0}) || corner == pt({0, 1})));

  // overlapping collinear segments intersect in dimension c
  std::vector<Polytope> overlap = {hull_of(1, {pt({0}), pt({2})}),
                                   hull_of(1, {pt({1}), pt({3})})};
  const auto v1 = lemma_eq_cycle(make_polytope_chain(1, 1, overlap));
  CHECK(v1.status == LemmaEqOutcome::Status::hyp1_violation);
}

TEST_CASE("lemma_eq_cycle on the cube surface") {
  // six axis-aligned unit squares forming the boundary of the cube
  auto quad = [](std::vector<Point> pts) { return hull_of(3, std::move(pts)); };
  std::vector<Polytope> faces = {
      quad({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})}),
      quad({pt({0, 0, 1}), pt({1, 0, 1}), pt({0, 1, 1}), pt({1, 1, 1})}),
      quad({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 0, 1}), pt({1, 0, 1})}),
      quad({pt({0, 1, 0}), pt({1, 1, 0}), pt({0, 1, 1}), pt({1, 1, 1})}),
      quad({pt({0, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({0, 1, 1})}),
      quad({pt({1, 0, 0}), pt({1, 1, 0}), pt({1, 0, 1}), pt({1, 1, 1})})};
  const auto out = lemma_eq_cycle(make_polytope_chain(2, 3, faces));
  REQUIRE(out.ok());
  CHECK(out.cycle.size() == 12);
  CHECK(is_cycle(out.cycle));
  CHECK(is_simplicial(out.cycle));
  // support preserved: every output simplex lies in an input face and every
  // input face is met by the output
  for (const auto& s : out.cycle.simplices) {
    bool covered = false;
    for (const auto& f : faces) covered = covered || polytope_subset(simplex_polytope(s), f);
    CHECK(covered);
  }
  for (const auto& f : faces) {
    bool covered = false;
    for (const auto& s : out.cycle.simplices)
      covered = covered || contains(f, centroid(simplex_polytope(s)));
    CHECK(covered);
  }
}

TEST_CASE("lemma_eq_cycle keeps the support of an even simplicial chain") {
  const Chain tb = tetra_boundary();
  std::vector<Polytope> cells;
  for (const auto& s : tb.simplices) cells.push_back(simplex_polytope(s));
  const auto out = lemma_eq_cycle(make_polytope_chain(2, 3, cells));
  REQUIRE(out.ok());
  CHECK(out.cycle == tb);
}

TEST_SUITE_END();
