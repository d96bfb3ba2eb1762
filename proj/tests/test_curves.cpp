#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "cnp/curves.hpp"
#include "cnp/json_io.hpp"
#include "cnp/peripherality.hpp"

using namespace cnp;

static EndSpace load_data(const std::string& name) {
  const char* dir = std::getenv("CNP_DATA_DIR");
  REQUIRE(dir != nullptr);
  return load_space(std::string(dir) + "/" + name);
}

static Curve seam(const Window& w, const std::set<int>& faces) {
  auto c = curve_around_faces(w, faces);
  REQUIRE(c.has_value());
  return *c;
}

TEST_CASE("reduce: backtracks, idempotence, boundary flags") {
  auto fig4 = load_data("figure4.json");
  auto w = build_window(fig4, 0);
  const auto& g = w.dual();
  auto c = seam(w, {w.row_faces()[0], w.row_faces()[1]});
  std::vector<int> darts = c.word.darts;
  darts.push_back(4);
  darts.push_back(5);
  auto again = make_curve(w, darts);
  CHECK(again.word.darts == c.word.darts);
  CHECK(reduce(w, c).word.darts == c.word.darts);
  Curve bp;
  bp.word.closed = true;
  bp.word.darts = g.face_word(0);
  bp = reduce(w, bp);
  CHECK(is_boundary_parallel(w, bp));
  CHECK_FALSE(is_essential(w, bp));
}

TEST_CASE("four-holed sphere seams intersect twice") {
  auto fig4 = load_data("figure4.json");
  auto w = build_window(fig4, 0);
  int f0 = w.row_faces()[0], f1 = w.row_faces()[1], f2 = w.row_faces()[2];
  auto a = seam(w, {f0, f1});
  auto b = seam(w, {f0, f2});
  CHECK(intersection_number(w, a, b) == 2);
  CHECK(intersection_number(w, b, a) == 2);
  CHECK(intersection_number(w, a, a) == 0);
}

TEST_CASE("twist basics and the n i^2 law") {
  auto fig4 = load_data("figure4.json");
  auto w = build_window(fig4, 0);
  int f0 = w.row_faces()[0], f1 = w.row_faces()[1], f2 = w.row_faces()[2];
  auto a = seam(w, {f0, f1});
  auto b = seam(w, {f0, f2});
  CHECK(twist_image(w, b, a, 0).word.darts == b.word.darts);
  auto disj = seam(w, {f0, f1});
  CHECK(twist_image(w, a, disj, 3).word.darts == a.word.darts);
  auto tb = twist_image(w, b, a, 1);
  CHECK(intersection_number(w, tb, b) == 4);
  auto tb2 = twist_image(w, b, a, -1);
  CHECK(intersection_number(w, tb2, b) == 4);
  auto t1 = twist_image(w, twist_image(w, b, a, 1), a, 2);
  auto t3 = twist_image(w, b, a, 3);
  CHECK(t1.word.darts == t3.word.darts);
  auto back = twist_image(w, twist_image(w, b, a, 2), a, -2);
  CHECK(back.word.darts == b.word.darts);
  for (int n = 1; n <= 3; ++n) {
    auto tn = twist_image(w, b, a, n);
    CHECK(intersection_number(w, tn, b) == 4 * n);
  }
}

TEST_CASE("twists along handle curves grow linearly when i = 1") {
  auto g1 = load_data("genus1z5.json");
  auto w = build_window(g1, 0);
  REQUIRE(w.genus == 1);
  auto a = make_curve(w, w.basis_loop(w.handle_edges()[0].first).darts);
  auto b = make_curve(w, w.basis_loop(w.handle_edges()[0].second).darts);
  REQUIRE(intersection_number(w, a, b) == 1);
  for (int n = 1; n <= 4; ++n) {
    auto tn = twist_image(w, b, a, n);
    CHECK(intersection_number(w, tn, b) == n);
  }
}

TEST_CASE("separation and end partitions") {
  auto fig4 = load_data("figure4.json");
  auto w = build_window(fig4, 0);
  std::set<int> c1_faces = {w.face_of_label("A[c1#1]"),
                            w.face_of_label("A[c1#2]")};
  auto alpha = seam(w, c1_faces);
  CHECK(is_separating(w, alpha));
  auto ep = end_partition(w, alpha);
  CHECK(zeta_clopen(ep.side_one, fig4) == 2);
  CHECK(zeta_clopen(ep.side_two, fig4) == 2);
  auto comp = profile_complement(fig4, ep.side_one);
  CHECK(comp == ep.side_two);

  auto g1 = load_data("genus1z5.json");
  auto wg = build_window(g1, 0);
  auto h = make_curve(wg, wg.basis_loop(wg.handle_edges()[0].first).darts);
  CHECK_FALSE(is_separating(wg, h));
  CHECK_THROWS_AS(end_partition(wg, h), Error);

  for (const auto& c : enumerate_simple_curves(w, 10))
    CHECK(is_separating(w, c));
}

TEST_CASE("enumeration finds the expected small-cap curves") {
  auto fig4 = load_data("figure4.json");
  auto w = build_window(fig4, 0);
  auto curves = enumerate_simple_curves(w, 8);
  CHECK(!curves.empty());
  std::set<std::vector<int>> set;
  for (const auto& c : curves) {
    CHECK(is_essential(w, c));
    CHECK(self_intersection_number(w.dual(), c.word) == 0);
    CHECK(set.insert(c.word.darts).second);
  }
  auto bigger = enumerate_simple_curves(w, 12);
  auto a = seam(w, {w.row_faces()[0], w.row_faces()[1]});
  bool found = false;
  for (const auto& c : bigger)
    if (c.word.darts == a.word.darts) found = true;
  CHECK(found);
}

TEST_CASE("surgery: once-punctured torus base case") {
  auto g1 = load_data("genus1z5.json");
  auto w = build_window(g1, 0);
  auto a = make_curve(w, w.basis_loop(w.handle_edges()[0].first).darts);
  auto b = make_curve(w, w.basis_loop(w.handle_edges()[0].second).darts);
  REQUIRE(intersection_number(w, a, b) == 1);
  REQUIRE(is_nonperipheral(w, a).nonperipheral);
  auto beta = surgery_step(a, b, w);
  CHECK(intersection_number(w, beta, a) == 0);
  CHECK(intersection_number(w, beta, b) == 0);
  CHECK(is_nonperipheral(w, beta).nonperipheral);
}

TEST_CASE("surgery reduces intersection against alpha") {
  auto fig5 = load_data("figure5.json");
  auto w = build_window(fig5, 0);
  int fc1 = w.face_of_label("A[cantor#1]");
  int fc2 = w.face_of_label("A[cantor#2]");
  int fxA = w.face_of_label("A[xA]");
  auto alpha = seam(w, {fc1, fc2});
  auto gamma = seam(w, {fc2, fxA});
  REQUIRE(is_nonperipheral(w, alpha).nonperipheral);
  REQUIRE(is_nonperipheral(w, gamma).nonperipheral);
  int i0 = intersection_number(w, alpha, gamma);
  REQUIRE(i0 >= 1);
  auto beta = surgery_step(alpha, gamma, w);
  CHECK(intersection_number(w, beta, alpha) < i0);
  CHECK(is_nonperipheral(w, beta).nonperipheral);
  CHECK(intersection_number(w, beta, gamma) <= 1);
}
