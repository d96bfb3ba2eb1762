#include "cnp/window.hpp"

#include <algorithm>
#include <numeric>
#include <array>
#include <functional>

namespace cnp {

namespace {

// Peel order of track levels: W^0 first, then alternating outward.
std::vector<int> peel_order(int count, int truncation) {
  std::vector<int> ks;
  for (int i = 0; ks.size() < static_cast<size_t>(count) && i <= truncation;
       ++i) {
    if (i == 0) {
      ks.push_back(0);
      continue;
    }
    ks.push_back(i);
    if (ks.size() < static_cast<size_t>(count)) ks.push_back(-i);
  }
  return ks;
}

ClopenProfile tail_profile(const EndSpace& space, const AnchorBlock& b) {
  ClopenProfile p;
  switch (b.kind) {
    case AnchorBlock::Kind::IsolatedMax:
      p.isolated_max_contained.insert(b.orbit);
      for (const auto& z : space.below(b.orbit))
        p.nonmax_content[z] = Content::Partial;
      break;
    case AnchorBlock::Kind::CantorHalf:
      p.cantor_content[b.orbit] = Content::Partial;
      for (const auto& z : space.below(b.orbit))
        p.nonmax_content[z] = Content::Partial;
      break;
    case AnchorBlock::Kind::PBlock:
      for (const auto& o : space.orbits()) {
        auto m = space.derived_unique_max(o.id);
        if (m && *m == b.orbit) p.nonmax_content[o.id] = Content::Partial;
      }
      break;
  }
  return normalize_profile(space, p);
}

bool block_planar(const EndSpace& space, const AnchorBlock& b) {
  auto prof = tail_profile(space, b);
  for (const auto& [id, c] : prof.cantor_content)
    if (c != Content::None && !space.orbit(id).planar) return false;
  for (const auto& [id, c] : prof.nonmax_content)
    if (c != Content::None && !space.orbit(id).planar) return false;
  for (const auto& id : prof.isolated_max_contained)
    if (!space.orbit(id).planar) return false;
  return true;
}

std::string level_name(const ShiftTrack& t, int k) {
  return t.name() + ":W[" + std::to_string(k) + "]";
}

}  // namespace

std::vector<WindowLabel> window_label_plan(const EndSpace& space, int level,
                                           int truncation) {
  require(level >= 0, ErrorKind::BadInput, "negative window level");
  require(level <= truncation, ErrorKind::TruncationExceeded,
          "window level exceeds the track truncation");
  auto decomp = anchor_decomposition(space);
  auto tracks = shift_orbit_decomposition(space, decomp, truncation);

  std::map<std::string, AnchorBlock> block_by_name;
  for (const auto& b : decomp.all_blocks()) block_by_name[b.name()] = b;
  std::set<std::string> flanked;
  for (const auto& t : tracks) {
    flanked.insert(t.block_a);
    flanked.insert(t.block_b);
  }

  auto make_tail = [&](const AnchorBlock& b) {
    WindowLabel l;
    l.kind = WindowLabel::Kind::BlockTail;
    l.name = b.name();
    l.block = b.name();
    l.planar = block_planar(space, b);
    l.profile = tail_profile(space, b);
    return l;
  };
  auto make_level = [&](const ShiftTrack& t, int k) {
    WindowLabel l;
    l.kind = WindowLabel::Kind::TrackLevel;
    l.name = level_name(t, k);
    l.track = t.name();
    l.level_k = k;
    l.planar = t.planar;
    l.profile = t.level_profile(space);
    return l;
  };

  std::vector<WindowLabel> out;
  std::set<std::string> emitted;
  auto emit_tail = [&](const std::string& name) {
    if (emitted.count(name)) return;
    emitted.insert(name);
    out.push_back(make_tail(block_by_name.at(name)));
  };
  for (const auto& t : tracks) {
    emit_tail(t.block_a);
    auto ks = peel_order(std::min(level, 2 * truncation + 1), truncation);
    std::sort(ks.begin(), ks.end());
    for (int k : ks) out.push_back(make_level(t, k));
    emit_tail(t.block_b);
  }
  for (const auto& b : decomp.all_blocks()) emit_tail(b.name());

  // Root selection: prefer a tail that flanks no track, then a P or isolated
  // tail, and only as a last resort a Cantor-half tail.
  auto rank = [&](const WindowLabel& l) {
    if (l.kind != WindowLabel::Kind::BlockTail) return 99;
    const auto& b = block_by_name.at(l.block);
    if (!flanked.count(l.block)) return 0;
    if (b.kind == AnchorBlock::Kind::PBlock) return 1;
    if (b.kind == AnchorBlock::Kind::IsolatedMax) return 2;
    return 3;
  };
  int root_idx = -1, best = 100;
  for (int i = 0; i < static_cast<int>(out.size()); ++i) {
    int r = rank(out[i]);
    if (r <= best) {  // prefer later entries on ties
      best = r;
      root_idx = i;
    }
  }
  require(root_idx >= 0, ErrorKind::Internal, "no root label");
  WindowLabel root = out[root_idx];
  out.erase(out.begin() + root_idx);
  out.push_back(root);
  return out;
}

const WindowLabel& Window::label(int face) const {
  require(face >= 0 && face < static_cast<int>(labels_.size()),
          ErrorKind::BadInput, "face id out of range");
  return labels_[face];
}

int Window::face_of_label(const std::string& name) const {
  auto it = label_face_.find(name);
  require(it != label_face_.end(), ErrorKind::BadInput,
          "unknown label " + name);
  return it->second;
}

std::vector<int> Window::boundary_cycle(int face) const {
  std::vector<int> out;
  for (int d : dual_.face_word(face)) out.push_back(RibbonGraph::edge_of(d));
  return out;
}

const std::vector<int>& Window::carriers(const std::string& orbit) const {
  auto it = carriers_.find(orbit);
  require(it != carriers_.end(), ErrorKind::BadInput,
          "orbit has no carriers: " + orbit);
  return it->second;
}

std::vector<int> Window::tree_path_from_root(int v) const {
  std::vector<int> darts;
  while (tree_parent_[v] != -1) {
    darts.push_back(tree_parent_[v]);  // dart pointing from parent to v
    v = dual_.vert(tree_parent_[v]);
  }
  std::reverse(darts.begin(), darts.end());
  return darts;
}

namespace {
// root-based unreduced petal loop; keeps the basepoint so loops concatenate
std::vector<int> raw_loop(const Window& w, const RibbonGraph& g,
                          const std::vector<int>& down,
                          const std::vector<int>& up, int e) {
  std::vector<int> darts = down;
  darts.push_back(2 * e);
  for (auto it = up.rbegin(); it != up.rend(); ++it)
    darts.push_back(RibbonGraph::twin(*it));
  (void)w;
  (void)g;
  return darts;
}
}  // namespace

DartPath Window::basis_loop(int e) const {
  require(!tree_edge_[e], ErrorKind::BadInput, "tree edge has no basis loop");
  DartPath p;
  p.closed = true;
  p.darts = raw_loop(*this, dual_, tree_path_from_root(dual_.vert(2 * e)),
                     tree_path_from_root(dual_.vert(2 * e + 1)), e);
  return reduce_path(dual_, p);
}

std::vector<int> Window::word_to_basis(const DartPath& p) const {
  std::vector<int> letters;
  for (int d : p.darts) {
    int e = RibbonGraph::edge_of(d);
    if (tree_edge_[e]) continue;
    letters.push_back(d % 2 == 0 ? (e + 1) : -(e + 1));
  }
  // free reduction in letters
  std::vector<int> red;
  for (int l : letters) {
    if (!red.empty() && red.back() == -l)
      red.pop_back();
    else
      red.push_back(l);
  }
  return red;
}

DartPath Window::basis_to_word(const std::vector<int>& letters) const {
  DartPath p;
  p.closed = true;
  for (int l : letters) {
    int e = std::abs(l) - 1;
    require(!tree_edge_[e], ErrorKind::BadInput, "letter names a tree edge");
    std::vector<int> loop =
        raw_loop(*this, dual_, tree_path_from_root(dual_.vert(2 * e)),
                 tree_path_from_root(dual_.vert(2 * e + 1)), e);
    if (l < 0) {
      std::reverse(loop.begin(), loop.end());
      for (auto& d : loop) d = RibbonGraph::twin(d);
    }
    p.darts.insert(p.darts.end(), loop.begin(), loop.end());
  }
  return reduce_path(dual_, p);
}

DartPath Window::enclosing_curve(const std::vector<int>& row_positions,
                                 int handles) const {
  std::vector<int> letters;
  for (int i = 0; i < handles && i < static_cast<int>(handle_edges_.size());
       ++i) {
    int a = handle_edges_[i].first + 1, b = handle_edges_[i].second + 1;
    letters.insert(letters.end(), {a, b, -a, -b});
  }
  std::vector<int> rows = row_positions;
  std::sort(rows.begin(), rows.end());
  for (int r : rows) {
    require(r >= 0 && r < static_cast<int>(row_edges_.size()),
            ErrorKind::BadInput, "row position out of range");
    letters.push_back(row_edges_[r] + 1);
  }
  return basis_to_word(letters);
}

std::vector<std::string> Window::validate() const {
  std::vector<std::string> diags;
  int V = num_boundaries();
  int E = dual_.num_edges();
  int F = static_cast<int>(tris_.size());
  // chi of the bounded surface: F_tri - E_tri (ideal vertices removed).
  if (F - E != 2 - 2 * genus - V)
    diags.push_back("chi mismatch: F-E=" + std::to_string(F - E) +
                    " expected " + std::to_string(2 - 2 * genus - V));
  if (dual_.num_faces() != V) diags.push_back("boundary/label count mismatch");
  for (int f = 0; f < dual_.num_faces(); ++f)
    if (labels_[f].name.empty()) diags.push_back("unlabeled boundary");
  for (const auto& o : space_->orbits()) {
    auto it = carriers_.find(o.id);
    if (it == carriers_.end() || it->second.empty())
      diags.push_back("orbit " + o.id + " carried by no boundary");
    else if (o.maximal_kind == MaximalKind::IsolatedMaximal &&
             it->second.size() != 1)
      diags.push_back("isolated maximal orbit " + o.id +
                      " carried by several boundaries");
  }
  return diags;
}

Window build_window(const EndSpace& space, int level, int truncation) {
  auto plan = window_label_plan(space, level, truncation);
  int b = static_cast<int>(plan.size());
  require(b >= 3, ErrorKind::BadInput,
          "window needs at least 3 boundary components");

  Window w;
  w.space_ = &space;
  w.level = level;
  w.truncation = truncation;
  if (space.genus().infinite) {
    int peeled_nonplanar = 0;
    for (const auto& l : plan)
      if (l.kind == WindowLabel::Kind::TrackLevel && !l.planar)
        ++peeled_nonplanar;
    w.genus = peeled_nonplanar;
  } else {
    w.genus = space.genus().value;
  }

  int h = w.genus;
  int slits = b - 1;
  int N = 4 * h + 2 * slits;
  require(N >= 3, ErrorKind::BadInput, "degenerate polygon");

  // Polygon sides: handles first (a b a^- b^- per handle), then slit pairs.
  // side j runs from corner j to corner j+1 (mod N).
  // Identified pairs:
  std::vector<std::pair<int, int>> pairs;  // (side, side)
  for (int i = 0; i < h; ++i) {
    int base = 4 * i;
    pairs.push_back({base + 0, base + 2});
    pairs.push_back({base + 1, base + 3});
  }
  for (int j = 0; j < slits; ++j) {
    int base = 4 * h + 2 * j;
    pairs.push_back({base, base + 1});
  }

  // Corner orbits via union-find.
  std::vector<int> uf(N);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto unite = [&](int x, int y) { uf[find(x)] = find(y); };
  for (const auto& [p, q] : pairs) {
    // side p (corners p,p+1) glued in reverse to side q (corners q,q+1):
    // corner p == corner q+1, corner p+1 == corner q.
    unite(p, (q + 1) % N);
    unite((p + 1) % N, q);
  }

  // Triangles T_1..T_{N-2}; dual vertex id = T index - 1.
  int nT = N - 2;
  // Complex edges: diagonals g_2..g_{N-2}, then side pairs.
  // Map polygon side -> (triangle, slot).
  auto side_site = [&](int s) -> std::pair<int, int> {
    if (s == 0) return {0, 0};
    if (s == N - 1) return {nT - 1, 2};
    return {s - 1, 1};
  };
  struct Site {
    int tri, slot;
  };
  std::vector<std::pair<Site, Site>> edge_sites;
  std::vector<int> diag_edge(N, -1);  // diagonal g_j -> edge id
  for (int j = 2; j <= N - 2; ++j) {
    // g_j between T_{j-1} (slot2) and T_j (slot0); tri ids j-2 and j-1.
    diag_edge[j] = static_cast<int>(edge_sites.size());
    edge_sites.push_back({Site{j - 2, 2}, Site{j - 1, 0}});
  }
  std::vector<int> pair_edge(pairs.size(), -1);
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto [p, q] = pairs[k];
    auto [tp, sp] = side_site(p);
    auto [tq, sq] = side_site(q);
    pair_edge[k] = static_cast<int>(edge_sites.size());
    edge_sites.push_back({Site{tp, sp}, Site{tq, sq}});
  }
  int E = static_cast<int>(edge_sites.size());

  // Dual ribbon graph.
  std::vector<std::pair<int, int>> dual_edges(E);
  std::vector<std::array<int, 3>> tri_dart(nT, {-1, -1, -1});
  for (int e = 0; e < E; ++e) {
    dual_edges[e] = {edge_sites[e].first.tri, edge_sites[e].second.tri};
    tri_dart[edge_sites[e].first.tri][edge_sites[e].first.slot] = 2 * e;
    tri_dart[edge_sites[e].second.tri][edge_sites[e].second.slot] = 2 * e + 1;
  }
  std::vector<std::vector<int>> rot(nT);
  for (int t = 0; t < nT; ++t) {
    for (int s = 0; s < 3; ++s) {
      require(tri_dart[t][s] != -1, ErrorKind::Internal, "unfilled slot");
      rot[t].push_back(tri_dart[t][s]);
    }
  }
  w.dual_ = RibbonGraph(nT, dual_edges, rot);
  require(w.dual_.num_faces() == b, ErrorKind::Internal,
          "window face count mismatch");

  // Triangulation exposure.
  w.tris_.resize(nT);
  for (int t = 0; t < nT; ++t)
    for (int s = 0; s < 3; ++s) {
      w.tris_[t].dart[s] = tri_dart[t][s];
      w.tris_[t].e[s] = tri_dart[t][s] >> 1;
    }

  // Identify faces with corner orbits. Triangle T (dual vertex t, polygon
  // index j=t+1): corner between slots 0,1 = polygon corner j; slots 1,2 =
  // corner j+1; slots 2,0 = corner 0.
  auto corner_of = [&](int t, int gap) {
    int j = t + 1;
    if (gap == 0) return j;
    if (gap == 1) return (j + 1) % N;
    return 0;
  };
  std::map<int, int> orbit_face;  // corner orbit rep -> dual face
  for (int t = 0; t < nT; ++t) {
    for (int gap = 0; gap < 3; ++gap) {
      int f = w.dual_.corner_face(t, gap);
      int orb = find(corner_of(t, gap));
      auto it = orbit_face.find(orb);
      if (it == orbit_face.end())
        orbit_face[orb] = f;
      else
        require(it->second == f, ErrorKind::Internal,
                "corner orbit split across faces");
    }
  }
  require(static_cast<int>(orbit_face.size()) == b, ErrorKind::Internal,
          "orbit/face bijection failed");

  // Row labels at slit corners, root label at corner 0's orbit.
  w.labels_.assign(b, {});
  std::vector<bool> assigned(b, false);
  for (int j = 0; j < slits; ++j) {
    int corner = (4 * h + 2 * j + 1) % N;
    int f = orbit_face.at(find(corner));
    require(!assigned[f], ErrorKind::Internal, "label collision");
    assigned[f] = true;
    w.labels_[f] = plan[j];
    w.row_faces_.push_back(f);
  }
  {
    int f = orbit_face.at(find(0));
    require(!assigned[f], ErrorKind::Internal, "root label collision");
    assigned[f] = true;
    w.labels_[f] = plan[b - 1];
    w.root_face_ = f;
  }
  for (int f = 0; f < b; ++f) {
    require(assigned[f], ErrorKind::Internal, "face left unlabeled");
    w.label_face_[w.labels_[f].name] = f;
  }

  // Spanning tree: the diagonal path. Parent darts point root -> leaf.
  w.tree_edge_.assign(E, false);
  for (int j = 2; j <= N - 2; ++j) w.tree_edge_[diag_edge[j]] = true;
  w.tree_parent_.assign(nT, -1);
  for (int j = 2; j <= N - 2; ++j) {
    // dart 2e sits at tri j-2, twin at tri j-1; parent of (j-1) is (j-2).
    w.tree_parent_[j - 1] = 2 * diag_edge[j];
  }

  // Petal edges per row position and handle edge pairs.
  for (int j = 0; j < slits; ++j)
    w.row_edges_.push_back(pair_edge[2 * h + j]);
  for (int i = 0; i < h; ++i)
    w.handle_edges_.push_back(
        {pair_edge[2 * i], pair_edge[2 * i + 1]});

  // Orbit carriers.
  for (const auto& o : space.orbits()) {
    std::vector<int> cs;
    for (int f = 0; f < b; ++f) {
      const auto& pr = w.labels_[f].profile;
      bool has = pr.isolated_max_contained.count(o.id) ||
                 (pr.cantor_content.count(o.id) &&
                  pr.cantor_content.at(o.id) != Content::None) ||
                 (pr.nonmax_content.count(o.id) &&
                  pr.nonmax_content.at(o.id) != Content::None);
      if (has) cs.push_back(f);
    }
    w.carriers_[o.id] = cs;
  }

  // Nesting: refinement of the previous level's labels.
  if (level > 0) {
    auto prev = window_label_plan(space, level - 1, truncation);
    std::set<std::string> prev_names, cur_names;
    for (const auto& l : prev) prev_names.insert(l.name);
    for (const auto& l : plan) cur_names.insert(l.name);
    auto decomp = anchor_decomposition(space);
    auto tracks = shift_orbit_decomposition(space, decomp, truncation);
    std::map<std::string, const ShiftTrack*> track_by_name;
    for (const auto& t : tracks) track_by_name[t.name()] = &t;
    for (const auto& l : prev)
      w.parent_refinement_[l.name] = {l.name};
    for (const auto& l : plan) {
      if (prev_names.count(l.name)) continue;
      // newly peeled level: split off the tail on its sign side
      const ShiftTrack* t = track_by_name.at(l.track);
      std::string tail = l.level_k <= 0 ? t->block_a : t->block_b;
      w.parent_refinement_[tail].push_back(l.name);
    }
  }

  auto diags = w.validate();
  require(diags.empty(), ErrorKind::Internal,
          "window invariant violation: " + (diags.empty() ? "" : diags[0]));
  return w;
}

}  // namespace cnp
