#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnp/endspace.hpp"
#include "cnp/ribbon.hpp"

namespace cnp {

// Boundary label of a window: either the deep tail of an anchor block or one
// peeled level of a shift track.
struct WindowLabel {
  enum class Kind { BlockTail, TrackLevel };
  Kind kind;
  std::string name;
  std::string block;       // tail: block name
  std::string track;       // level: track name
  int level_k = 0;         // level: the W^k index
  bool planar = true;
  ClopenProfile profile;   // end content carried behind this boundary
};

// A finite-type triangulated window realizing one level of the exhaustion.
// The triangulation is an ideal one (all vertices are boundary markers); its
// trivalent dual is the engine all curve machinery runs on: a curve's
// crossing word is exactly a dart path in the dual.
class Window {
 public:
  // triangulation exposure
  struct Triangle {
    int e[3];      // edge ids in boundary order
    int dart[3];   // dual dart ids realizing those sides
  };

  int level = 0;
  int genus = 0;
  int truncation = 8;

  const RibbonGraph& dual() const { return dual_; }
  const EndSpace& space() const { return *space_; }

  int num_boundaries() const { return static_cast<int>(labels_.size()); }
  const WindowLabel& label(int face) const;          // by dual face id
  const std::vector<WindowLabel>& labels() const { return labels_; }
  int face_of_label(const std::string& name) const;
  // Boundary cycle of a label: the edges crossed when encircling it.
  std::vector<int> boundary_cycle(int face) const;

  const std::vector<Triangle>& triangles() const { return tris_; }
  int num_tri_vertices() const { return num_boundaries(); }
  int num_tri_edges() const { return dual_.num_edges(); }

  // labels carrying content of an orbit
  const std::vector<int>& carriers(const std::string& orbit) const;

  // --- free group data (spanning tree = the fan path) ---
  // Basis letters are edge ids of non-tree edges; slit_edge maps a row
  // position to the edge of that boundary's petal.
  bool is_tree_edge(int e) const { return tree_edge_[e]; }
  const std::vector<int>& row_faces() const { return row_faces_; }
  const std::vector<int>& row_edges() const { return row_edges_; }
  int root_face() const { return root_face_; }
  const std::vector<std::pair<int, int>>& handle_edges() const {
    return handle_edges_;
  }

  // Petal loop (fundamental cycle) of a non-tree edge, based at triangle 0.
  DartPath basis_loop(int e) const;
  // Closed path -> based word in non-tree edge letters (edge+1 signed).
  std::vector<int> word_to_basis(const DartPath& p) const;
  // Based word in non-tree letters -> reduced closed dart path.
  DartPath basis_to_word(const std::vector<int>& letters) const;

  // Simple closed curve enclosing the given row positions plus the first
  // `handles` handle pairs (syllable product in polygon order).
  DartPath enclosing_curve(const std::vector<int>& row_positions,
                           int handles = 0) const;

  // parent-level refinement: label name at level-1 -> refined names here
  const std::map<std::string, std::vector<std::string>>&
  parent_level_boundary() const {
    return parent_refinement_;
  }

  // Diagnostics for the structural invariants; empty when valid.
  std::vector<std::string> validate() const;

  friend Window build_window(const EndSpace& space, int level, int truncation);

 private:
  const EndSpace* space_ = nullptr;
  RibbonGraph dual_;
  std::vector<WindowLabel> labels_;           // by dual face id
  std::map<std::string, int> label_face_;
  std::vector<Triangle> tris_;
  std::vector<bool> tree_edge_;
  std::vector<int> tree_parent_;              // dual vertex -> parent dart
  std::vector<int> row_faces_;                // face id per row position
  std::vector<int> row_edges_;                // petal edge per row position
  int root_face_ = -1;
  std::vector<std::pair<int, int>> handle_edges_;  // (a_i, b_i) edge ids
  std::map<std::string, std::vector<int>> carriers_;
  std::map<std::string, std::vector<std::string>> parent_refinement_;

  std::vector<int> tree_path_from_root(int v) const;
};

// Deterministic window builder; level <= truncation.
Window build_window(const EndSpace& space, int level, int truncation = 8);

struct LevelPlanEntry {
  WindowLabel label;
  // nothing else; order in vector = row order, last entry = root label
};

// The boundary-label plan for a level (row order + root last). Exposed for
// tests and for the nesting computation.
std::vector<WindowLabel> window_label_plan(const EndSpace& space, int level,
                                           int truncation);

}  // namespace cnp
