#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cnp/errors.hpp"

namespace cnp {

// Oriented surface with boundary, modeled as a ribbon graph (the dual of an
// ideal triangulation in practice). Darts 2e and 2e+1 are the two halves of
// edge e; rotations list darts counterclockwise around each vertex. The
// complementary faces are the boundary circles of the surface.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  RibbonGraph(int n_vertices, const std::vector<std::pair<int, int>>& edges,
              const std::vector<std::vector<int>>& rotations);

  int num_vertices() const { return n_vertices_; }
  int num_edges() const { return static_cast<int>(vert_.size() / 2); }
  int num_darts() const { return static_cast<int>(vert_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  static int twin(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int vert(int d) const { return vert_[d]; }

  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  // Position of dart d in the rotation at its vertex.
  int rot_pos(int d) const { return rot_pos_[d]; }
  int rot_size(int v) const { return static_cast<int>(rot_[v].size()); }
  int rot_at(int v, int i) const {
    int n = rot_size(v);
    return rot_[v][((i % n) + n) % n];
  }

  // Face walks. face_of(d) is the face lying along dart d's walk; each dart
  // belongs to exactly one face walk.
  int face_of(int d) const { return face_of_[d]; }
  const std::vector<int>& face_word(int f) const { return faces_[f]; }
  int face_next(int d) const;

  // Face of the corner between rotation slots i and i+1 at vertex v.
  int corner_face(int v, int i) const;

  // Steps ccw from dart `from` to dart `to` at their common vertex
  // (1 .. valence-1); both must emanate from the same vertex and differ.
  int ccw_gap(int from, int to) const;

  int euler_characteristic() const {
    return n_vertices_ - num_edges();  // spine of the bounded surface
  }
  int genus() const {
    // chi(S) = 2 - 2g - b with b = num_faces().
    return (2 - num_faces() - euler_characteristic()) / 2;
  }

 private:
  int n_vertices_ = 0;
  std::vector<int> vert_;                  // per dart
  std::vector<std::vector<int>> rot_;      // per vertex
  std::vector<int> rot_pos_;               // per dart
  std::vector<std::vector<int>> faces_;    // dart walks
  std::vector<int> face_of_;               // per dart
  std::vector<std::vector<int>> corner_face_;  // per vertex, per slot

  void trace_faces();
};

// A combinatorial path: sequence of darts, consecutive ones chained through
// vertices (vert(twin(d_i)) == vert(d_{i+1})). Closed paths are cyclic words;
// open paths are arcs and carry the boundary faces their ends rest on.
struct DartPath {
  std::vector<int> darts;
  bool closed = true;
  int start_face = -1;  // arcs only
  int end_face = -1;    // arcs only

  int size() const { return static_cast<int>(darts.size()); }
  bool operator==(const DartPath&) const = default;
  bool operator<(const DartPath& o) const;
};

bool path_is_connected(const RibbonGraph& g, const DartPath& p);

// Free reduction: removes backtracks (cyclically for closed paths).
// Closed paths that cancel away entirely come back empty.
DartPath reduce_path(const RibbonGraph& g, DartPath p);

DartPath reverse_path(const DartPath& p);

// Canonical representative of the unoriented free homotopy class: the
// lexicographically least rotation over both orientations. Arcs are
// canonicalized up to reversal only.
DartPath canonical_form(const RibbonGraph& g, const DartPath& p);

bool is_primitive(const DartPath& p);

// --- arrangements ----------------------------------------------------------

struct Crossing {
  int item_a, pos_a;  // strand of item_a between darts pos_a-1 and pos_a
  int item_b, pos_b;
  int vertex;
  int sign;   // +1 / -1, consistent orientation convention
  int ord_a;  // order of this crossing along item_a's chord
  int ord_b;  // order along item_b's chord
};

// Minimal-position realization of a family of reduced paths: linear orders
// across every band plus chord endpoints around every vertex disk, from
// which exact crossing numbers are read off.
class Arrangement {
 public:
  Arrangement(const RibbonGraph& g, std::vector<DartPath> items);

  const RibbonGraph& graph() const { return *g_; }
  const std::vector<DartPath>& items() const { return items_; }

  // Crossings between the two items (or self-crossings when a == b).
  int crossings(int a, int b) const;
  std::vector<Crossing> crossing_list(int a, int b) const;
  int total_self_crossings(int item) const { return crossings(item, item); }

  // Scans for a bigon between items a and b (adjacent crossing pair whose
  // spliced loop is null-homotopic). Minimal position has none.
  bool has_bigon(int a, int b) const;

  // Strand order data for one band: entries (item, pos) sorted across the
  // band, "left to right" seen along the canonical dart 2e.
  const std::vector<std::pair<int, int>>& band_order(int e) const {
    return bands_[e];
  }

  // Disk data for the chord of item at position pos: (vertex, t_in, t_out).
  std::tuple<int, int, int> chord_at(int item, int pos) const;
  int disk_size(int v) const {
    return static_cast<int>(disk_tokens_[v].size());
  }

 private:
  const RibbonGraph* g_;
  std::vector<DartPath> items_;
  std::vector<std::vector<std::pair<int, int>>> bands_;

  struct Token {  // endpoint on a vertex disk
    int item, pos, end;  // end: 0 = v0 side of the band, 1 = v1 side
    bool corner = false;
    int corner_item = -1, corner_which = -1;  // arc-end tokens
  };
  std::vector<std::vector<Token>> disk_tokens_;  // per vertex, cyclic order
  struct Chord {
    int item, pos;
    int t_in = -1, t_out = -1;
  };
  std::vector<std::vector<Chord>> disk_chords_;  // per vertex

  void build();
  friend struct ArrangementTestAccess;
};

int intersection_number(const RibbonGraph& g, const DartPath& a,
                        const DartPath& b);
int self_intersection_number(const RibbonGraph& g, const DartPath& a);

// --- cutting ----------------------------------------------------------------

// Result of cutting the surface along a family of disjoint simple closed
// curves. The pieces form a new ribbon graph; faces remember where they came
// from (an original boundary face, or one side of a cut curve).
struct CutComplex {
  RibbonGraph graph;
  int n_components = 0;
  std::vector<int> vertex_component;          // per new vertex
  std::vector<int> face_origin;               // per new face: old face or -1
  std::vector<std::pair<int, int>> face_cut;  // per new face: (curve, side) or (-1,-1)
  std::vector<int> face_component;            // per new face
  std::vector<int> dart_parent;               // per new dart: old dart id
  std::vector<int> new_vertex_of_old;         // representative map unused; -1

  int component_euler(int c) const;
  std::vector<int> component_faces(int c) const;
  int component_boundary_count(int c) const;
  int component_genus(int c) const;
};

CutComplex cut_along(const RibbonGraph& g, const std::vector<DartPath>& curves);

}  // namespace cnp
