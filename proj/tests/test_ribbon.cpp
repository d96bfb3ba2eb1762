#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnp/ribbon.hpp"

using namespace cnp;

// Pair of pants: two triangles glued along three edges. Dual = theta graph
// with two trivalent vertices.
static RibbonGraph pants() {
  // edges 0,1,2 all between vertex 0 and vertex 1
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 1}, {0, 1}};
  // rotations: triangle orientations make the two vertices mirror each other
  std::vector<std::vector<int>> rot = {{0, 2, 4}, {1, 5, 3}};
  return RibbonGraph(2, edges, rot);
}

// One-holed torus: dual of its one-triangle-pair ideal triangulation.
static RibbonGraph torus_one_hole() {
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 1}, {0, 1}};
  std::vector<std::vector<int>> rot = {{0, 2, 4}, {1, 3, 5}};
  return RibbonGraph(2, edges, rot);
}

TEST_CASE("face tracing and euler characteristic") {
  auto p = pants();
  CHECK(p.num_faces() == 3);
  CHECK(p.genus() == 0);
  auto t = torus_one_hole();
  CHECK(t.num_faces() == 1);
  CHECK(t.genus() == 1);
}

TEST_CASE("reduction and canonical forms") {
  auto p = pants();
  DartPath w;
  w.closed = true;
  w.darts = {0, 1, 0, 3};  // contains a backtrack 0,1
  auto r = reduce_path(p, w);
  CHECK(r.size() == 2);
  auto c1 = canonical_form(p, r);
  auto c2 = canonical_form(p, reverse_path(r));
  CHECK(c1 == c2);
  DartPath trivial;
  trivial.closed = true;
  trivial.darts = {0, 1};
  CHECK(reduce_path(p, trivial).darts.empty());
}

TEST_CASE("pants: boundary curves are disjoint") {
  auto p = pants();
  // face words are the three boundary circles
  for (int f = 0; f < 3; ++f) {
    DartPath a;
    a.closed = true;
    a.darts = p.face_word(f);
    a = canonical_form(p, a);
    CHECK(self_intersection_number(p, a) == 0);
    for (int g = 0; g < 3; ++g) {
      if (f == g) continue;
      DartPath b;
      b.closed = true;
      b.darts = p.face_word(g);
      CHECK(intersection_number(p, a, b) == 0);
    }
  }
}

TEST_CASE("one-holed torus: the two core curves meet once") {
  auto t = torus_one_hole();
  // closed curves through both vertices using two of the three edges
  DartPath a, b, c;
  a.closed = b.closed = c.closed = true;
  a.darts = {0, 3};  // edge0 forward, edge1 backward
  b.darts = {0, 5};  // edge0 forward, edge2 backward
  c.darts = {2, 5};  // edge1 forward, edge2 backward
  CHECK(path_is_connected(t, a));
  CHECK(path_is_connected(t, b));
  CHECK(self_intersection_number(t, a) == 0);
  CHECK(self_intersection_number(t, b) == 0);
  CHECK(self_intersection_number(t, c) == 0);
  CHECK(intersection_number(t, a, b) == 1);
  CHECK(intersection_number(t, a, c) == 1);
  CHECK(intersection_number(t, b, c) == 1);
  // i is symmetric and vanishes on equal classes
  CHECK(intersection_number(t, b, a) == 1);
  CHECK(intersection_number(t, a, a) == 0);
}

TEST_CASE("one-holed torus: powers of a curve word are rejected") {
  auto t = torus_one_hole();
  DartPath sq;
  sq.closed = true;
  sq.darts = {0, 3, 0, 3};
  CHECK_FALSE(is_primitive(sq));
}

TEST_CASE("bigon scan on minimal arrangements") {
  auto t = torus_one_hole();
  DartPath a, b;
  a.closed = b.closed = true;
  a.darts = {0, 3};
  b.darts = {0, 5};
  Arrangement arr(t, {canonical_form(t, a), canonical_form(t, b)});
  CHECK_FALSE(arr.has_bigon(0, 1));
  CHECK(arr.crossings(0, 1) == 1);
}

TEST_CASE("cut rejects boundary-parallel curves") {
  auto p = pants();
  DartPath a;
  a.closed = true;
  a.darts = p.face_word(0);
  a = canonical_form(p, a);
  CHECK_THROWS_AS(cut_along(p, {a}), Error);
}

TEST_CASE("cut along a non-separating curve on the one-holed torus") {
  auto t = torus_one_hole();
  DartPath a;
  a.closed = true;
  a.darts = {0, 3};
  auto cut = cut_along(t, {canonical_form(t, a)});
  CHECK(cut.n_components == 1);
  // result: sphere with 3 boundary circles (old one + two copies)
  CHECK(cut.component_genus(0) == 0);
  CHECK(cut.component_boundary_count(0) == 3);
  int originals = 0, copies = 0;
  for (int f = 0; f < cut.graph.num_faces(); ++f) {
    if (cut.face_origin[f] >= 0)
      ++originals;
    else
      ++copies;
  }
  CHECK(originals == 1);
  CHECK(copies == 2);
}

TEST_CASE("cut along two disjoint parallel non-separating curves") {
  auto t = torus_one_hole();
  DartPath a;
  a.closed = true;
  a.darts = {0, 3};
  // a second disjoint copy in the same class does not exist as a distinct
  // reduced word here, so cut along a and then along an image inside the cut
  // piece is exercised at the window level instead. Here: single cut twice
  // composed equals genus drop by one.
  auto cut = cut_along(t, {canonical_form(t, a)});
  CHECK(cut.component_genus(0) + 1 == t.genus());
}
