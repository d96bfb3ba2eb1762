#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "cnp/json_io.hpp"
#include "cnp/window.hpp"

using namespace cnp;

static EndSpace load_data(const std::string& name) {
  const char* dir = std::getenv("CNP_DATA_DIR");
  REQUIRE(dir != nullptr);
  return load_space(std::string(dir) + "/" + name);
}

TEST_CASE("level-0 windows realize the anchor decomposition") {
  auto fig4 = load_data("figure4.json");
  auto w4 = build_window(fig4, 0);
  CHECK(w4.genus == 0);
  CHECK(w4.num_boundaries() == 4);
  CHECK(w4.validate().empty());

  auto fig5 = load_data("figure5.json");
  auto w5 = build_window(fig5, 0);
  CHECK(w5.genus == 0);
  CHECK(w5.num_boundaries() == 5);
  CHECK(w5.num_boundaries() == zeta_surface(fig5));
  CHECK(w5.validate().empty());
}

TEST_CASE("deeper windows peel one level per nonempty track") {
  auto fig5 = load_data("figure5.json");
  for (int lvl = 1; lvl <= 3; ++lvl) {
    auto w = build_window(fig5, lvl);
    // two nonempty tracks
    CHECK(w.num_boundaries() == 5 + 2 * lvl);
    // one nonplanar track adds one handle per peeled level
    CHECK(w.genus == lvl);
    CHECK(w.validate().empty());

    // refinement: labels of level-1 window expand by one level per track
    auto prev = build_window(fig5, lvl - 1);
    const auto& refine = w.parent_level_boundary();
    int expansions = 0;
    for (const auto& [parent, kids] : refine) {
      for (const auto& k : kids)
        if (k != parent) ++expansions;
    }
    CHECK(expansions == 2);
    // every parent label still exists or is refined
    for (int f = 0; f < prev.num_boundaries(); ++f)
      CHECK(refine.count(prev.label(f).name) == 1);
  }
}

TEST_CASE("figure-4 windows stay planar") {
  auto fig4 = load_data("figure4.json");
  for (int lvl = 0; lvl <= 3; ++lvl) {
    auto w = build_window(fig4, lvl);
    CHECK(w.genus == 0);
    CHECK(w.num_boundaries() == 4 + 2 * lvl);
  }
}

TEST_CASE("truncation guard") {
  auto fig4 = load_data("figure4.json");
  CHECK_THROWS_AS(build_window(fig4, 9, 8), Error);
}

TEST_CASE("basis loops and conversions round-trip") {
  auto fig5 = load_data("figure5.json");
  auto w = build_window(fig5, 1);
  const auto& g = w.dual();
  // every petal is a simple curve parallel to its boundary
  for (size_t r = 0; r < w.row_edges().size(); ++r) {
    auto loop = w.basis_loop(w.row_edges()[r]);
    CHECK(self_intersection_number(g, loop) == 0);
    // its class encircles exactly that boundary: equal to the face word
    DartPath fw;
    fw.closed = true;
    fw.darts = g.face_word(w.row_faces()[r]);
    CHECK(canonical_form(g, loop).darts == canonical_form(g, fw).darts);
  }
  // basis -> word -> basis round trip on letter strings
  std::vector<int> letters = {w.row_edges()[0] + 1, -(w.row_edges()[2] + 1),
                              w.row_edges()[1] + 1};
  auto word = w.basis_to_word(letters);
  auto back = w.word_to_basis(word);
  CHECK(back == letters);
}

TEST_CASE("enclosing curves are simple and avoid enclosed boundaries") {
  auto fig5 = load_data("figure5.json");
  auto w = build_window(fig5, 0);
  const auto& g = w.dual();
  int rows = static_cast<int>(w.row_faces().size());
  REQUIRE(rows == 4);
  for (int i = 0; i < rows; ++i) {
    for (int j = i; j < rows; ++j) {
      std::vector<int> span;
      for (int k = i; k <= j; ++k) span.push_back(k);
      auto c = w.enclosing_curve(span);
      if (c.darts.empty()) continue;  // enclosing everything may be trivial
      CHECK(self_intersection_number(g, c) == 0);
      // disjoint from each enclosed boundary circle
      for (int k = i; k <= j; ++k) {
        DartPath fw;
        fw.closed = true;
        fw.darts = g.face_word(w.row_faces()[k]);
        CHECK(intersection_number(g, c, fw) == 0);
      }
    }
  }
  // non-contiguous subsets stay simple too
  auto c = w.enclosing_curve({0, 2});
  CHECK(self_intersection_number(g, c) == 0);
  auto c2 = w.enclosing_curve({1, 3});
  CHECK(self_intersection_number(g, c2) == 0);
}

TEST_CASE("windows with finite genus put handles in the polygon") {
  EndSpace s({OrbitSpec{"c", MaximalKind::CantorMaximal, true, {"c"}, {}},
              OrbitSpec{"x", MaximalKind::IsolatedMaximal, true, {}, {}},
              OrbitSpec{"y", MaximalKind::IsolatedMaximal, true, {}, {}}},
             Genus::finite(2));
  auto w = build_window(s, 0);
  CHECK(w.genus == 2);
  CHECK(w.num_boundaries() == 4);
  CHECK(w.handle_edges().size() == 2);
  // handle loops intersect once
  auto a = w.basis_loop(w.handle_edges()[0].first);
  auto b = w.basis_loop(w.handle_edges()[0].second);
  CHECK(self_intersection_number(w.dual(), a) == 0);
  CHECK(self_intersection_number(w.dual(), b) == 0);
  CHECK(intersection_number(w.dual(), a, b) == 1);
}
