#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

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

TEST_CASE("peripherality rules") {
  auto fig5 = load_data("figure5.json");
  auto w = build_window(fig5, 1);
  // non-separating curve on an infinite genus surface is peripheral
  auto h = make_curve(w, w.basis_loop(w.handle_edges()[0].first).darts);
  REQUIRE_FALSE(is_separating(w, h));
  CHECK_FALSE(is_nonperipheral(w, h).nonperipheral);

  // cutting off half of one Cantor orbit is peripheral
  auto half = seam(w, {w.face_of_label("A[cantor#1]")});
  CHECK_FALSE(is_nonperipheral(w, half).nonperipheral);

  // the full Cantor orbit on one side is non-peripheral
  auto w0 = build_window(fig5, 0);
  auto both = seam(w0, {w0.face_of_label("A[cantor#1]"),
                        w0.face_of_label("A[cantor#2]")});
  CHECK(is_nonperipheral(w0, both).nonperipheral);

  // figure-4 alpha is non-peripheral
  auto fig4 = load_data("figure4.json");
  auto w4 = build_window(fig4, 0);
  auto alpha = seam(w4, {w4.face_of_label("A[c1#1]"),
                         w4.face_of_label("A[c1#2]")});
  CHECK(is_nonperipheral(w4, alpha).nonperipheral);

  // non-separating curve on finite genus is non-peripheral
  auto g1 = load_data("genus1z5.json");
  auto wg = build_window(g1, 0);
  auto hh = make_curve(wg, wg.basis_loop(wg.handle_edges()[0].first).darts);
  CHECK(is_nonperipheral(wg, hh).nonperipheral);
}

TEST_CASE("figure-4 alpha is isolated at small caps") {
  auto fig4 = load_data("figure4.json");
  auto w = build_window(fig4, 1);
  auto alpha = seam(w, {w.face_of_label("A[c1#1]"),
                        w.face_of_label("A[c1#2]"),
                        w.face_of_label("O(A[c1#1],A[c1#2]):W[0]")});
  REQUIRE(is_nonperipheral(w, alpha).nonperipheral);
  BallParams params;
  params.cap = 14;
  auto nb = cnp_neighbors(w, alpha, params);
  CHECK(nb.empty());
}

TEST_CASE("balls, distances, probe on figure-5") {
  auto fig5 = load_data("figure5.json");
  auto w = build_window(fig5, 1);
  int fc1 = w.face_of_label("A[cantor#1]");
  int fc2 = w.face_of_label("A[cantor#2]");
  int flv = w.face_of_label("O(A[cantor#1],A[cantor#2]):W[0]");
  auto center = seam(w, {fc1, fc2, flv});
  REQUIRE(is_nonperipheral(w, center).nonperipheral);
  BallParams params;
  params.cap = 12;
  params.radius = 2;
  auto ball = cnp_ball(w, center, params);
  CHECK(ball.vertices.size() >= 2);
  // distance basics
  CHECK(*cnp_distance(w, center, center, params) == 0);
  auto nb = cnp_neighbors(w, center, params);
  REQUIRE(!nb.empty());
  CHECK(*cnp_distance(w, center, nb[0], params) == 1);
  auto probe = hyperbolicity_probe(ball, 500, 7);
  CHECK(probe.delta >= 0.0);
  CHECK(probe.samples == 500);
  // deterministic per seed
  auto probe2 = hyperbolicity_probe(ball, 500, 7);
  CHECK(probe.delta == probe2.delta);
}

TEST_CASE("surgery path obeys the 2i+2 bound") {
  auto fig5 = load_data("figure5.json");
  auto w = build_window(fig5, 0);
  int fc1 = w.face_of_label("A[cantor#1]");
  int fc2 = w.face_of_label("A[cantor#2]");
  int fxA = w.face_of_label("A[xA]");
  int fxC = w.face_of_label("A[xC]");
  auto a = seam(w, {fc1, fc2});
  auto b = seam(w, {fc2, fxA});
  auto c = seam(w, {fxA, fxC});
  for (auto [x, y] : {std::pair{a, b}, {a, c}, {b, c}}) {
    if (!is_nonperipheral(w, x).nonperipheral) continue;
    if (!is_nonperipheral(w, y).nonperipheral) continue;
    auto path = surgery_path(x, y, w);
    int i = intersection_number(w, x, y);
    CHECK(path.length() <= 2 * i + 2);
    CHECK(path.vertices.front().word.darts == x.word.darts);
    CHECK(path.vertices.back().word.darts == y.word.darts);
  }
  // twisted pairs give larger intersections
  auto tb = twist_image(w, b, a, 2);
  if (is_nonperipheral(w, tb).nonperipheral) {
    auto path = surgery_path(tb, b, w);
    int i = intersection_number(w, tb, b);
    CHECK(path.length() <= 2 * i + 2);
  }
}
