#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cnp/window.hpp"

namespace cnp {

// A taut simple closed curve on a window, stored as the canonical reduced
// cyclic crossing word of the dual graph.
struct Curve {
  int window_level = 0;
  DartPath word;
  bool normalized = false;

  bool operator==(const Curve&) const = default;
  bool operator<(const Curve& o) const { return word < o.word; }
};

// Reduce to the taut canonical representative. Throws NullHomotopic when the
// word cancels away and NotSimple when the class has no embedded
// representative.
Curve reduce(const Window& w, Curve c);

Curve make_curve(const Window& w, std::vector<int> darts);

bool is_boundary_parallel(const Window& w, const Curve& c);
bool is_essential(const Window& w, const Curve& c);

int intersection_number(const Window& w, const Curve& a, const Curve& b);

bool is_separating(const Window& w, const Curve& c);

struct EndPartition {
  ClopenProfile side_one;
  ClopenProfile side_two;
  Genus genus_one;
  Genus genus_two;
  std::vector<int> faces_one;  // window faces on side one
  std::vector<int> faces_two;
};

EndPartition end_partition(const Window& w, const Curve& c);

// Dehn twist image; power 0 is the identity. A positive power follows the
// orientation convention fixed by the crossing signs of the arrangement.
Curve twist_image(const Window& w, const Curve& curve, const Curve& axis,
                  int power);

// Boundary words of a regular neighborhood of the union of two embedded
// pieces of curves, traced through the local crossing data. Used by the
// surgery constructions.
struct SurgeryCandidates {
  std::vector<Curve> boundaries;  // essential candidates, canonical form
  int face_count = 0;             // boundary count of the neighborhood
};

// Curve enclosing a subset of boundary labels (by face ids). Handles the
// root face by passing to the complement. Returns nullopt when the subset
// (or its complement) is empty or the curve is inessential.
std::optional<Curve> curve_around_faces(const Window& w,
                                        const std::set<int>& faces);

// All isotopy classes of essential simple closed curves whose crossing word
// has length <= cap, in canonical order.
std::vector<Curve> enumerate_simple_curves(const Window& w, int cap);

// One surgery step of the connectivity argument: returns a curve beta with
// i(beta, alpha) < i(gamma, alpha), non-peripheral, within distance 2 of
// gamma in the non-peripheral curve graph.
Curve surgery_step(const Curve& alpha, const Curve& gamma, const Window& w);

}  // namespace cnp
