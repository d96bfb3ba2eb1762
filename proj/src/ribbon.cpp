#include "cnp/ribbon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cnp {

RibbonGraph::RibbonGraph(int n_vertices,
                         const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::vector<int>>& rotations)
    : n_vertices_(n_vertices) {
  vert_.assign(2 * edges.size(), -1);
  for (size_t e = 0; e < edges.size(); ++e) {
    require(edges[e].first >= 0 && edges[e].first < n_vertices &&
                edges[e].second >= 0 && edges[e].second < n_vertices,
            ErrorKind::BadInput, "edge endpoint out of range");
    vert_[2 * e] = edges[e].first;
    vert_[2 * e + 1] = edges[e].second;
  }
  require(static_cast<int>(rotations.size()) == n_vertices,
          ErrorKind::BadInput, "rotation count != vertex count");
  rot_ = rotations;
  rot_pos_.assign(vert_.size(), -1);
  std::vector<int> seen(vert_.size(), 0);
  for (int v = 0; v < n_vertices; ++v) {
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
      int d = rot_[v][i];
      require(d >= 0 && d < static_cast<int>(vert_.size()),
              ErrorKind::BadInput, "rotation lists unknown dart");
      require(vert_[d] == v, ErrorKind::BadInput,
              "dart listed at wrong vertex");
      require(!seen[d]++, ErrorKind::BadInput, "dart repeated in rotations");
      rot_pos_[d] = i;
    }
  }
  for (int d = 0; d < static_cast<int>(vert_.size()); ++d)
    require(seen[d] == 1, ErrorKind::BadInput, "dart missing from rotations");
  trace_faces();
}

int RibbonGraph::face_next(int d) const {
  // Walk the boundary face: after traversing d, turn to the rotation
  // predecessor of the twin.
  int t = twin(d);
  int v = vert_[t];
  int i = rot_pos_[t];
  int n = rot_size(v);
  return rot_[v][(i + n - 1) % n];
}

void RibbonGraph::trace_faces() {
  faces_.clear();
  face_of_.assign(vert_.size(), -1);
  for (int d0 = 0; d0 < static_cast<int>(vert_.size()); ++d0) {
    if (face_of_[d0] != -1) continue;
    int f = static_cast<int>(faces_.size());
    std::vector<int> walk;
    int d = d0;
    do {
      face_of_[d] = f;
      walk.push_back(d);
      d = face_next(d);
      require(static_cast<int>(walk.size()) <= static_cast<int>(vert_.size()),
              ErrorKind::Internal, "face trace runaway");
    } while (d != d0);
    faces_.push_back(std::move(walk));
  }
  // Corner between rotation slots i, i+1 at v: shared by the face walks that
  // pass the corner. Walking dart d = rot_[v][i+1] begins at that corner?
  // Use: the corner before dart rot_[v][i+1] is crossed by the face of the
  // dart whose face_next emanates there, i.e. face_of(rot_[v][i+1]).
  corner_face_.assign(n_vertices_, {});
  for (int v = 0; v < n_vertices_; ++v) {
    int n = rot_size(v);
    corner_face_[v].assign(n, -1);
    for (int i = 0; i < n; ++i) {
      // corner between slots i and i+1 belongs to the face traced just
      // before entering dart rot(v)[i+1]... that face also equals
      // face_of(rot(v)[i+1]) by the face_next convention:
      // face_next(x) = rot-predecessor of twin(x); the dart following the
      // corner (i, i+1) within its face is rot_[v][i] — whose face walk
      // arrived through twin(rot_[v][i+1]).
      corner_face_[v][i] = face_of_[rot_[v][i]];
    }
  }
}

int RibbonGraph::corner_face(int v, int i) const {
  int n = rot_size(v);
  return corner_face_[v][((i % n) + n) % n];
}

int RibbonGraph::ccw_gap(int from, int to) const {
  int v = vert_[from];
  require(vert_[to] == v && from != to, ErrorKind::Internal,
          "ccw_gap needs distinct darts at one vertex");
  int n = rot_size(v);
  return ((rot_pos_[to] - rot_pos_[from]) % n + n) % n;
}

bool DartPath::operator<(const DartPath& o) const {
  if (closed != o.closed) return closed < o.closed;
  if (darts.size() != o.darts.size()) return darts.size() < o.darts.size();
  if (darts != o.darts) return darts < o.darts;
  return std::tie(start_face, end_face) < std::tie(o.start_face, o.end_face);
}

bool path_is_connected(const RibbonGraph& g, const DartPath& p) {
  const auto& d = p.darts;
  if (d.empty()) return true;
  int n = static_cast<int>(d.size());
  int lim = p.closed ? n : n - 1;
  for (int i = 0; i < lim; ++i) {
    int nxt = d[(i + 1) % n];
    if (g.vert(RibbonGraph::twin(d[i])) != g.vert(nxt)) return false;
  }
  return true;
}

DartPath reduce_path(const RibbonGraph& g, DartPath p) {
  require(path_is_connected(g, p), ErrorKind::BadInput,
          "dart path is not connected");
  std::vector<int> out;
  for (int d : p.darts) {
    if (!out.empty() && out.back() == RibbonGraph::twin(d))
      out.pop_back();
    else
      out.push_back(d);
  }
  if (p.closed) {
    size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == RibbonGraph::twin(out[hi - 1])) {
      ++lo;
      --hi;
    }
    out = std::vector<int>(out.begin() + lo, out.begin() + hi);
  }
  p.darts = std::move(out);
  return p;
}

DartPath reverse_path(const DartPath& p) {
  DartPath r = p;
  r.darts.clear();
  for (auto it = p.darts.rbegin(); it != p.darts.rend(); ++it)
    r.darts.push_back(RibbonGraph::twin(*it));
  if (!p.closed) {
    r.start_face = p.end_face;
    r.end_face = p.start_face;
  }
  return r;
}

DartPath canonical_form(const RibbonGraph& g, const DartPath& p0) {
  DartPath p = reduce_path(g, p0);
  if (p.darts.empty()) return p;
  if (!p.closed) {
    DartPath r = reverse_path(p);
    return std::min(p, r);
  }
  auto best_rotation = [](const std::vector<int>& w) {
    std::vector<int> best = w;
    int n = static_cast<int>(w.size());
    for (int s = 1; s < n; ++s) {
      std::vector<int> cand(n);
      for (int i = 0; i < n; ++i) cand[i] = w[(s + i) % n];
      if (cand < best) best = cand;
    }
    return best;
  };
  std::vector<int> a = best_rotation(p.darts);
  std::vector<int> b = best_rotation(reverse_path(p).darts);
  DartPath out = p;
  out.darts = std::min(a, b);
  return out;
}

bool is_primitive(const DartPath& p) {
  int n = p.size();
  for (int per = 1; per < n; ++per) {
    if (n % per != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (p.darts[i] != p.darts[i % per]) ok = false;
    if (ok) return false;
  }
  return true;
}

// --- arrangement -------------------------------------------------------------

namespace {

// Walks the itinerary of a strand away from one band end. Yields darts; for
// arcs it terminates with an END marker carrying the boundary face.
struct RayWalker {
  const DartPath* path;
  int idx;      // next dart index to emit (forward) / previous (backward)
  bool fwd;     // direction of travel relative to the stored word
  bool done = false;

  struct Step {
    bool is_end;
    int dart;  // valid when !is_end
    int face;  // valid when is_end
  };

  Step next() {
    const auto& d = path->darts;
    int n = static_cast<int>(d.size());
    if (path->closed) {
      if (fwd) {
        int v = d[((idx % n) + n) % n];
        ++idx;
        return {false, v, -1};
      }
      int v = RibbonGraph::twin(d[((idx % n) + n) % n]);
      --idx;
      return {false, v, -1};
    }
    if (fwd) {
      if (idx >= n) return {true, -1, path->end_face};
      return {false, d[idx++], -1};
    }
    if (idx < 0) return {true, -1, path->start_face};
    return {false, RibbonGraph::twin(d[idx--]), -1};
  }
};

}  // namespace


Arrangement::Arrangement(const RibbonGraph& g, std::vector<DartPath> items)
    : g_(&g), items_(std::move(items)) {
  for (auto& p : items_) {
    require(path_is_connected(g, p), ErrorKind::BadInput,
            "arrangement item not a connected path");
    require(!p.darts.empty(), ErrorKind::BadInput, "empty arrangement item");
    DartPath r = reduce_path(g, p);
    require(r.darts.size() == p.darts.size(), ErrorKind::BadInput,
            "arrangement items must be reduced");
    if (p.closed)
      require(is_primitive(p), ErrorKind::BadInput,
              "arrangement items must be primitive");
  }
  build();
}

void Arrangement::build() {
  const RibbonGraph& g = *g_;
  int E = g.num_edges();
  bands_.assign(E, {});
  for (int it = 0; it < static_cast<int>(items_.size()); ++it) {
    const auto& d = items_[it].darts;
    for (int i = 0; i < static_cast<int>(d.size()); ++i)
      bands_[RibbonGraph::edge_of(d[i])].push_back({it, i});
  }

  // Ray toward one band end of a strand. end==1: the v1 side (the vertex of
  // twin(2e)); end==0: the v0 side.
  auto make_ray = [&](int item, int pos, int end) {
    const DartPath& p = items_[item];
    int d = p.darts[pos];
    bool strand_forward = (d % 2 == 0);  // traverses v0 -> v1
    RayWalker w;
    w.path = &p;
    if ((end == 1) == strand_forward) {
      w.fwd = true;
      w.idx = pos + 1;
    } else {
      w.fwd = false;
      w.idx = pos - 1;
    }
    return w;
  };

  // Compare two strands by their rays out of one band end. Returns -1 if a
  // is more counterclockwise-late (more "left" for a walker entering the
  // disk), +1 otherwise, 0 on a full tie.
  auto cmp_rays = [&](int e, int end, std::pair<int, int> a,
                      std::pair<int, int> b) -> int {
    RayWalker wa = make_ray(a.first, a.second, end);
    RayWalker wb = make_ray(b.first, b.second, end);
    int in_dart = (end == 1) ? RibbonGraph::twin(2 * e) : 2 * e;
    int guard = 0;
    int limit = 2 * (items_[a.first].size() + items_[b.first].size()) + 4;
    while (true) {
      require(++guard <= limit + 2, ErrorKind::Internal,
              "ray comparison failed to diverge");
      auto sa = wa.next();
      auto sb = wb.next();
      if (!sa.is_end && !sb.is_end && sa.dart == sb.dart) {
        in_dart = RibbonGraph::twin(sa.dart);
        continue;
      }
      int v = g.vert(in_dart);
      // Position on the half-open ccw scale from in_dart; corners live at
      // half-steps, encoded by doubling.
      auto position = [&](const RayWalker::Step& s) -> int {
        if (!s.is_end) return 2 * g.ccw_gap(in_dart, s.dart);
        int i = g.rot_pos(in_dart);
        int n = g.rot_size(v);
        if (g.corner_face(v, i) == s.face) return 1;  // corner just ccw of in
        if (g.corner_face(v, i - 1 + n) == s.face)
          return 2 * n - 1;  // corner just cw of in
        fail(ErrorKind::Internal, "arc end face not adjacent to corridor");
      };
      int pa = position(sa), pb = position(sb);
      if (pa == pb) {
        if (sa.is_end && sb.is_end) return 0;  // both ends share the corner
        fail(ErrorKind::Internal, "parallel rays with equal exits diverged");
      }
      return pa > pb ? -1 : +1;  // larger ccw gap = more left
    }
  };

  for (int e = 0; e < E; ++e) {
    auto& strands = bands_[e];
    std::sort(strands.begin(), strands.end());
    std::stable_sort(strands.begin(), strands.end(),
                     [&](const std::pair<int, int>& a,
                         const std::pair<int, int>& b) {
                       if (a == b) return false;
                       int c = cmp_rays(e, 1, a, b);
                       if (c != 0) return c < 0;
                       c = cmp_rays(e, 0, a, b);
                       require(c != 0, ErrorKind::Internal,
                               "indistinguishable strands in band");
                       // Seen from the v0 disk the leftness is mirrored.
                       return c > 0;
                     });
  }

  // Assemble vertex disks: token cycles and chords.
  int V = g.num_vertices();
  disk_tokens_.assign(V, {});
  disk_chords_.assign(V, {});

  std::map<std::tuple<int, int, int>, int> token_index;  // (item,pos,end)->idx

  struct PendingCorner {
    int vertex;
    int slot;  // corner between rotation slots slot, slot+1
    int item;
    int which;          // 0 = path start, 1 = path end
    int entry_item, entry_pos, entry_end;  // the band token it chains to
  };
  std::vector<PendingCorner> corners;

  for (int it = 0; it < static_cast<int>(items_.size()); ++it) {
    const DartPath& p = items_[it];
    if (p.closed) continue;
    const auto& d = p.darts;
    {  // start corner: at vert(d[0]), hugging start_face next to dart d[0]
      int v = g.vert(d[0]);
      int i = g.rot_pos(d[0]);
      int n = g.rot_size(v);
      int slot;
      if (g.corner_face(v, i) == p.start_face)
        slot = i;
      else if (g.corner_face(v, (i - 1 + n) % n) == p.start_face)
        slot = (i - 1 + n) % n;
      else
        fail(ErrorKind::BadInput, "arc start face not adjacent to first dart");
      int end0 = (d[0] % 2 == 0) ? 0 : 1;  // departure end of the band
      corners.push_back({v, slot, it, 0, it, 0, end0});
    }
    {  // end corner
      int last = d.back();
      int v = g.vert(RibbonGraph::twin(last));
      int a = RibbonGraph::twin(last);
      int i = g.rot_pos(a);
      int n = g.rot_size(v);
      int slot;
      if (g.corner_face(v, i) == p.end_face)
        slot = i;
      else if (g.corner_face(v, (i - 1 + n) % n) == p.end_face)
        slot = (i - 1 + n) % n;
      else
        fail(ErrorKind::BadInput, "arc end face not adjacent to last dart");
      int endl = (last % 2 == 0) ? 1 : 0;  // landing end of the band
      corners.push_back(
          {v, slot, it, 1, it, static_cast<int>(d.size()) - 1, endl});
    }
  }

  for (int v = 0; v < V; ++v) {
    auto& cycle = disk_tokens_[v];
    int n = g.rot_size(v);
    // First pass: slot tokens only, positions on the corner-free scale.
    token_index.clear();
    std::vector<std::vector<Token>> slot_runs(n);
    int running = 0;
    std::vector<int> slot_end_pos(n, 0);
    for (int si = 0; si < n; ++si) {
      int d = g.rot_at(v, si);
      int e = RibbonGraph::edge_of(d);
      int end = (d % 2 == 1) ? 1 : 0;  // which band end this disk holds
      const auto& strands = bands_[e];
      auto emit = [&](const std::pair<int, int>& s) {
        Token t{s.first, s.second, end, false, -1, -1};
        token_index[{t.item, t.pos, t.end}] = running++;
        slot_runs[si].push_back(t);
      };
      if (end == 1) {  // arrival disk: ccw = band order as listed
        for (const auto& s : strands) emit(s);
      } else {  // departure disk: mirrored
        for (auto itr = strands.rbegin(); itr != strands.rend(); ++itr)
          emit(*itr);
      }
      slot_end_pos[si] = running;
    }
    int total = running;
    // Second pass: splice corner clusters, nesting chords by entry distance.
    cycle.clear();
    for (int si = 0; si < n; ++si) {
      for (const auto& t : slot_runs[si]) cycle.push_back(t);
      std::vector<const PendingCorner*> here;
      for (const auto& c : corners)
        if (c.vertex == v && c.slot == si) here.push_back(&c);
      if (here.empty()) continue;
      int insert_pos = slot_end_pos[si];
      std::stable_sort(here.begin(), here.end(),
                       [&](const PendingCorner* x, const PendingCorner* y) {
                         auto px = token_index.at(
                             {x->entry_item, x->entry_pos, x->entry_end});
                         auto py = token_index.at(
                             {y->entry_item, y->entry_pos, y->entry_end});
                         int m = std::max(total, 1);
                         int dx = ((insert_pos - 1 - px) % m + m) % m;
                         int dy = ((insert_pos - 1 - py) % m + m) % m;
                         return dx > dy;  // farther entry first: chords nest
                       });
      for (const auto* c : here)
        cycle.push_back(Token{-1, -1, -1, true, c->item, c->which});
    }
  }

  // Rebuild the token index over final cycles, including corner tokens.
  std::map<std::tuple<int, int, int>, std::pair<int, int>> tok;  // ->(v,idx)
  std::map<std::pair<int, int>, std::pair<int, int>> corner_tok;
  for (int v = 0; v < V; ++v)
    for (int i = 0; i < static_cast<int>(disk_tokens_[v].size()); ++i) {
      const Token& t = disk_tokens_[v][i];
      if (t.corner)
        corner_tok[{t.corner_item, t.corner_which}] = {v, i};
      else
        tok[{t.item, t.pos, t.end}] = {v, i};
    }

  auto landing = [&](int item, int pos) {
    int d = items_[item].darts[pos];
    return std::tuple<int, int, int>{item, pos, (d % 2 == 0) ? 1 : 0};
  };
  auto departure = [&](int item, int pos) {
    int d = items_[item].darts[pos];
    return std::tuple<int, int, int>{item, pos, (d % 2 == 0) ? 0 : 1};
  };

  for (int it = 0; it < static_cast<int>(items_.size()); ++it) {
    const DartPath& p = items_[it];
    int m = p.size();
    if (p.closed) {
      for (int i = 0; i < m; ++i) {
        int prev = (i + m - 1) % m;
        auto [vi, ti] = tok.at(landing(it, prev));
        auto [vo, to] = tok.at(departure(it, i));
        require(vi == vo, ErrorKind::Internal, "chord spans two disks");
        disk_chords_[vi].push_back({it, i, ti, to});
      }
    } else {
      for (int i = 1; i < m; ++i) {
        auto [vi, ti] = tok.at(landing(it, i - 1));
        auto [vo, to] = tok.at(departure(it, i));
        require(vi == vo, ErrorKind::Internal, "chord spans two disks");
        disk_chords_[vi].push_back({it, i, ti, to});
      }
      {  // start chord: corner -> first band token
        auto [vc, tc] = corner_tok.at({it, 0});
        auto [vo, to] = tok.at(departure(it, 0));
        require(vc == vo, ErrorKind::Internal, "start chord spans disks");
        disk_chords_[vc].push_back({it, 0, tc, to});
      }
      {  // end chord: last band token -> corner
        auto [vi, ti] = tok.at(landing(it, m - 1));
        auto [vc, tc] = corner_tok.at({it, 1});
        require(vc == vi, ErrorKind::Internal, "end chord spans disks");
        disk_chords_[vc].push_back({it, m, ti, tc});
      }
    }
  }
}

namespace {

bool cyclic_between(int x, int a, int b, int n) {
  // true iff x lies strictly inside the ccw interval (a, b)
  auto norm = [&](int t) { return ((t % n) + n) % n; };
  int xa = norm(x - a), ba = norm(b - a);
  return xa > 0 && xa < ba;
}

}  // namespace

std::tuple<int, int, int> Arrangement::chord_at(int item, int pos) const {
  for (int v = 0; v < static_cast<int>(disk_chords_.size()); ++v)
    for (const auto& c : disk_chords_[v])
      if (c.item == item && c.pos == pos) return {v, c.t_in, c.t_out};
  fail(ErrorKind::Internal, "chord not found");
}

std::vector<Crossing> Arrangement::crossing_list(int a, int b) const {
  std::vector<Crossing> out;
  for (int v = 0; v < static_cast<int>(disk_chords_.size()); ++v) {
    const auto& chords = disk_chords_[v];
    int n = static_cast<int>(disk_tokens_[v].size());
    if (n == 0) continue;
    for (size_t i = 0; i < chords.size(); ++i) {
      for (size_t j = (a == b ? i + 1 : 0); j < chords.size(); ++j) {
        const Chord& ca = chords[i];
        const Chord& cb = chords[j];
        if (ca.item != a || cb.item != b) continue;
        if (a == b && ca.pos == cb.pos) continue;
        bool yi_in = cyclic_between(cb.t_in, ca.t_in, ca.t_out, n);
        bool yo_in = cyclic_between(cb.t_out, ca.t_in, ca.t_out, n);
        if (yi_in == yo_in) continue;  // no interleave
        Crossing c;
        c.item_a = a;
        c.pos_a = ca.pos;
        c.item_b = b;
        c.pos_b = cb.pos;
        c.vertex = v;
        c.sign = yi_in ? +1 : -1;
        // Position of the crossing along each chord: distance from the
        // chord's in-token to the other chord's endpoint on that side.
        auto gap_from = [&](int from, int x) {
          return ((x - from) % n + n) % n;
        };
        c.ord_a = gap_from(ca.t_in, yi_in ? cb.t_in : cb.t_out);
        c.ord_b = gap_from(cb.t_in,
                           cyclic_between(ca.t_in, cb.t_in, cb.t_out, n)
                               ? ca.t_in
                               : ca.t_out);
        out.push_back(c);
      }
    }
  }
  return out;
}

int Arrangement::crossings(int a, int b) const {
  return static_cast<int>(crossing_list(a, b).size());
}

bool Arrangement::has_bigon(int a, int b) const {
  if (a == b) return false;
  auto xs = crossing_list(a, b);
  if (xs.size() < 2) return false;
  const DartPath& pa = items_[a];
  const DartPath& pb = items_[b];
  if (!pa.closed || !pb.closed) return false;  // scan used for curves only
  int na = pa.size(), nb = pb.size();

  // Order crossings along each curve. Crossings sharing a chord of a are
  // ordered by where the b-endpoint enters the chord's ccw interval.
  auto order_along = [&](bool along_a) {
    std::vector<int> idx(xs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
      int pi = along_a ? xs[i].pos_a : xs[i].pos_b;
      int pj = along_a ? xs[j].pos_a : xs[j].pos_b;
      if (pi != pj) return pi < pj;
      int oi = along_a ? xs[i].ord_a : xs[i].ord_b;
      int oj = along_a ? xs[j].ord_a : xs[j].ord_b;
      if (oi != oj) return oi < oj;
      return i < j;
    });
    return idx;
  };
  auto ord_a = order_along(true);
  auto ord_b = order_along(false);
  std::vector<int> rank_b(xs.size());
  for (size_t r = 0; r < ord_b.size(); ++r) rank_b[ord_b[r]] = static_cast<int>(r);

  auto subword = [&](const DartPath& p, int from, int to) {
    std::vector<int> w;
    int n = p.size();
    int i = from;
    while (i != to) {
      w.push_back(p.darts[((i % n) + n) % n]);
      i = (i + 1) % n;
    }
    return w;
  };

  int m = static_cast<int>(xs.size());
  for (int r = 0; r < m; ++r) {
    int p = ord_a[r], q = ord_a[(r + 1) % m];
    // must also be adjacent along b
    int rb = rank_b[p];
    if (ord_b[(rb + 1) % m] != q && ord_b[(rb + m - 1) % m] != q) continue;
    std::vector<int> wa = subword(pa, xs[p].pos_a, xs[q].pos_a);
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<int> wb = dir == 0 ? subword(pb, xs[q].pos_b, xs[p].pos_b)
                                     : subword(pb, xs[p].pos_b, xs[q].pos_b);
      std::vector<int> loop = wa;
      if (dir == 0)
        loop.insert(loop.end(), wb.begin(), wb.end());
      else
        for (auto itr = wb.rbegin(); itr != wb.rend(); ++itr)
          loop.push_back(RibbonGraph::twin(*itr));
      // free reduction of the based loop
      std::vector<int> red;
      for (int d : loop) {
        if (!red.empty() && red.back() == RibbonGraph::twin(d))
          red.pop_back();
        else
          red.push_back(d);
      }
      size_t lo = 0, hi = red.size();
      while (hi - lo >= 2 && red[lo] == RibbonGraph::twin(red[hi - 1])) {
        ++lo;
        --hi;
      }
      if (lo >= hi) return true;
    }
  }
  return false;
}

int intersection_number(const RibbonGraph& g, const DartPath& a,
                        const DartPath& b) {
  DartPath ca = canonical_form(g, a);
  DartPath cb = canonical_form(g, b);
  require(!ca.darts.empty() && !cb.darts.empty(), ErrorKind::BadInput,
          "intersection of a null-homotopic path");
  if (ca.closed && cb.closed && ca.darts == cb.darts) return 0;
  Arrangement arr(g, {ca, cb});
  return arr.crossings(0, 1);
}

int self_intersection_number(const RibbonGraph& g, const DartPath& a) {
  DartPath ca = canonical_form(g, a);
  require(!ca.darts.empty(), ErrorKind::BadInput,
          "self-intersection of a null-homotopic path");
  Arrangement arr(g, {ca});
  return arr.crossings(0, 0);
}

// --- cutting -----------------------------------------------------------------

int CutComplex::component_euler(int c) const {
  int v = 0;
  for (int x : vertex_component)
    if (x == c) ++v;
  int e = 0;
  for (int d = 0; d < graph.num_darts(); d += 2)
    if (vertex_component[graph.vert(d)] == c) ++e;
  return v - e;
}

std::vector<int> CutComplex::component_faces(int c) const {
  std::vector<int> out;
  for (int f = 0; f < graph.num_faces(); ++f)
    if (face_component[f] == c) out.push_back(f);
  return out;
}

int CutComplex::component_boundary_count(int c) const {
  return static_cast<int>(component_faces(c).size());
}

int CutComplex::component_genus(int c) const {
  return (2 - component_boundary_count(c) - component_euler(c)) / 2;
}

CutComplex cut_along(const RibbonGraph& g, const std::vector<DartPath>& curves) {
  std::vector<DartPath> items;
  for (const auto& c : curves) {
    DartPath cc = canonical_form(g, c);
    require(cc.closed && !cc.darts.empty(), ErrorKind::BadInput,
            "cut_along expects essential closed curves");
    for (int f = 0; f < g.num_faces(); ++f) {
      DartPath fw;
      fw.closed = true;
      fw.darts = g.face_word(f);
      require(!(canonical_form(g, fw).darts == cc.darts), ErrorKind::BadInput,
              "cut_along expects non-boundary-parallel curves");
    }
    items.push_back(cc);
  }
  Arrangement arr(g, items);
  int k = static_cast<int>(items.size());
  for (int i = 0; i < k; ++i) {
    require(arr.crossings(i, i) == 0, ErrorKind::NotSimple,
            "cut curve is not simple");
    for (int j = i + 1; j < k; ++j)
      require(arr.crossings(i, j) == 0, ErrorKind::BadInput,
              "cut curves are not disjoint");
  }

  // Region decomposition of every vertex disk. Chords are non-crossing, so
  // regions correspond to the laminar family of chord intervals.
  int V = g.num_vertices();
  struct DiskData {
    int n_tokens = 0;
    std::vector<int> region_of_gap;  // gap i = between token i and i+1
    int n_regions = 0;
    std::vector<std::pair<int, int>> chord_of_gap_side;  // (item,pos) bounding
  };

  // Recover each disk's chords and token count from the arrangement by
  // rebuilding the same structures through public data: band orders.
  // Rebuild tokens per disk in the exact order used by Arrangement.
  std::vector<std::vector<std::tuple<int, int, int>>> tokens(V);
  std::vector<std::vector<int>> token_slot(V);
  for (int v = 0; v < V; ++v) {
    for (int si = 0; si < g.rot_size(v); ++si) {
      int d = g.rot_at(v, si);
      int e = RibbonGraph::edge_of(d);
      int end = (d % 2 == 1) ? 1 : 0;
      const auto& strands = arr.band_order(e);
      if (end == 1)
        for (const auto& s : strands) {
          tokens[v].push_back({s.first, s.second, end});
          token_slot[v].push_back(si);
        }
      else
        for (auto itr = strands.rbegin(); itr != strands.rend(); ++itr) {
          tokens[v].push_back({itr->first, itr->second, end});
          token_slot[v].push_back(si);
        }
    }
  }
  std::map<std::tuple<int, int, int>, std::pair<int, int>> tokpos;
  for (int v = 0; v < V; ++v)
    for (int i = 0; i < static_cast<int>(tokens[v].size()); ++i)
      tokpos[tokens[v][i]] = {v, i};

  struct DiskChord {
    int item, pos, t_in, t_out;
  };
  std::vector<std::vector<DiskChord>> chords(V);
  for (int it = 0; it < k; ++it) {
    const DartPath& p = items[it];
    int m = p.size();
    for (int i = 0; i < m; ++i) {
      int prev = (i + m - 1) % m;
      int dprev = p.darts[prev], dcur = p.darts[i];
      auto [vi, ti] = tokpos.at({it, prev, (dprev % 2 == 0) ? 1 : 0});
      auto [vo, to] = tokpos.at({it, i, (dcur % 2 == 0) ? 0 : 1});
      require(vi == vo, ErrorKind::Internal, "cut chord spans disks");
      chords[vi].push_back({it, i, ti, to});
    }
  }

  // Assign regions to gaps: the region of a gap is the innermost chord
  // interval containing it; gap 'n-1 -> 0' anchors the root region.
  std::vector<DiskData> disks(V);
  // region ids are global across disks
  int next_region = 0;
  std::vector<std::vector<int>> region_gaps;  // per region: (v, gap) packed
  std::vector<int> region_vertex;
  std::vector<std::vector<std::pair<int, int>>> region_gap_list;

  for (int v = 0; v < V; ++v) {
    int n = static_cast<int>(tokens[v].size());
    disks[v].n_tokens = n;
    int ngaps = std::max(n, 1);
    // n == 0: bare disk, single region, no chords.
    std::vector<int> innermost(ngaps, -1);  // chord index or -1 for root
    if (n > 0) {
      // For each chord pick the interval not containing the anchor gap
      // (gap between token n-1 and token 0 has index n-1).
      int anchor = n - 1;
      for (int ci = 0; ci < static_cast<int>(chords[v].size()); ++ci) {
        const auto& c = chords[v][ci];
        int x = c.t_in, y = c.t_out;
        // gaps strictly inside ccw interval (x, y): gaps x, x+1, .., y-1
        auto contains_gap = [&](int a, int b, int gap) {
          // gap i sits between tokens i and i+1; inside ccw (a,b) iff
          // token-interval covers it
          int len = ((b - a) % n + n) % n;
          int off = ((gap - a) % n + n) % n;
          return off < len;
        };
        bool use_xy = !contains_gap(x, y, anchor);
        int a = use_xy ? x : y, b = use_xy ? y : x;
        for (int off = 0;; ++off) {
          int gap = (a + off) % n;
          int len = ((b - a) % n + n) % n;
          if (off >= len) break;
          // innermost = chord with smallest interval containing the gap;
          // process later by comparing interval lengths
          if (innermost[gap] == -1) {
            innermost[gap] = ci;
          } else {
            const auto& o = chords[v][innermost[gap]];
            auto ilen = [&](const DiskChord& ch) {
              int xx = ch.t_in, yy = ch.t_out;
              auto cg = [&](int aa, int bb) {
                return ((bb - aa) % n + n) % n;
              };
              bool uxy = !contains_gap(xx, yy, anchor);
              return uxy ? cg(xx, yy) : cg(yy, xx);
            };
            if (ilen(c) < ilen(o)) innermost[gap] = ci;
          }
        }
      }
    }
    // Group gaps by innermost chord -> regions.
    std::map<int, int> region_of_chordside;
    for (int gap = 0; gap < ngaps; ++gap) {
      int key = (n == 0) ? -1 : innermost[gap];
      auto itr = region_of_chordside.find(key);
      int rid;
      if (itr == region_of_chordside.end()) {
        rid = next_region++;
        region_of_chordside[key] = rid;
        region_vertex.push_back(v);
        region_gap_list.push_back({});
      } else {
        rid = itr->second;
      }
      disks[v].region_of_gap.push_back(rid);
      region_gap_list[rid].push_back({v, gap});
    }
  }
  (void)region_gaps;

  // New edges: one per sub-band. Sub-band j of edge e lies between strands
  // j-1 and j in band order (walls at the extremes).
  struct NewEdge {
    int parent_edge;
    int sub;  // 0 .. m
    int r0, r1;  // regions at the v0 / v1 disks
  };
  std::vector<NewEdge> new_edges;

  // Gap index of sub-band mouth at a disk: tokens of edge e occupy a
  // contiguous run in the disk cycle; mouth j sits before the j-th token of
  // the run in *band order*.
  auto mouth_gap = [&](int e, int end, int sub) -> std::pair<int, int> {
    int d = (end == 1) ? RibbonGraph::twin(2 * e) : 2 * e;
    int v = g.vert(d);
    int n = static_cast<int>(tokens[v].size());
    const auto& strands = arr.band_order(e);
    int m = static_cast<int>(strands.size());
    // location of run start: count tokens before slot of dart d
    int before = 0;
    for (int si = 0; si < g.rot_pos(d); ++si) {
      int dd = g.rot_at(v, si);
      before += static_cast<int>(arr.band_order(RibbonGraph::edge_of(dd)).size());
    }
    // tokens of this run are at positions before..before+m-1.
    // In ccw order the run lists band order as-is at end==1, mirrored at 0.
    // Mouth sub sits: at end==1 between run tokens sub-1 and sub;
    // at end==0 between mirrored positions.
    int gap;
    if (m == 0) {
      gap = (before - 1 + n) % std::max(n, 1);
      return {v, gap};
    }
    if (end == 1) {
      // gap before run token `sub` (sub ranges 0..m); gap index i means
      // between tokens i and i+1, so "before token t" = gap t-1.
      gap = (before + sub - 1 + n) % n;
    } else {
      // mirrored: run position of band-index j is (m-1-j)
      // mouth sub (between band strands sub-1,sub) sits between run
      // positions m-sub and m-sub-1, i.e. before run token (m-sub).
      gap = (before + (m - sub) - 1 + n) % n;
    }
    return {v, gap};
  };

  for (int e = 0; e < g.num_edges(); ++e) {
    int m = static_cast<int>(arr.band_order(e).size());
    for (int sub = 0; sub <= m; ++sub) {
      auto [v0, g0] = mouth_gap(e, 0, sub);
      auto [v1, g1] = mouth_gap(e, 1, sub);
      int r0 = disks[v0].n_tokens == 0 ? disks[v0].region_of_gap[0]
                                       : disks[v0].region_of_gap[g0];
      int r1 = disks[v1].n_tokens == 0 ? disks[v1].region_of_gap[0]
                                       : disks[v1].region_of_gap[g1];
      new_edges.push_back({e, sub, r0, r1});
    }
  }

  // Rotations at new vertices: walk each region's boundary gaps in disk
  // order; at each gap the mouths opening into it are the incident darts.
  // A gap hosts exactly one mouth per adjacent band run boundary; we gather
  // mouths per (v,gap) first.
  // mouths per gap, keyed for ordering by the slot they open from
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> mouths_at_gap;
  std::vector<std::pair<int, int>> edge_list_new;
  for (int ne = 0; ne < static_cast<int>(new_edges.size()); ++ne) {
    const auto& E = new_edges[ne];
    edge_list_new.push_back({E.r0, E.r1});
    auto [v0, g0] = mouth_gap(E.parent_edge, 0, E.sub);
    auto [v1, g1] = mouth_gap(E.parent_edge, 1, E.sub);
    int slot0 = g.rot_pos(2 * E.parent_edge);
    int slot1 = g.rot_pos(RibbonGraph::twin(2 * E.parent_edge));
    mouths_at_gap[{v0, disks[v0].n_tokens == 0 ? 0 : g0}].push_back(
        {slot0, 2 * ne});
    mouths_at_gap[{v1, disks[v1].n_tokens == 0 ? 0 : g1}].push_back(
        {slot1, 2 * ne + 1});
  }

  std::vector<std::vector<int>> new_rot(next_region);
  for (int r = 0; r < next_region; ++r) {
    // gather this region's gaps in ccw disk order
    for (const auto& [v, gap] : region_gap_list[r]) {
      auto itr = mouths_at_gap.find({v, gap});
      if (itr == mouths_at_gap.end()) continue;
      auto ms = itr->second;
      // cyclic slot order starting at the slot of the gap's opening token
      int nslots = g.rot_size(v);
      int start_slot =
          token_slot[v].empty() ? 0 : token_slot[v][gap % token_slot[v].size()];
      std::sort(ms.begin(), ms.end(), [&](const std::pair<int, int>& x,
                                          const std::pair<int, int>& y) {
        int kx = ((x.first - start_slot) % nslots + nslots) % nslots;
        int ky = ((y.first - start_slot) % nslots + nslots) % nslots;
        if (kx != ky) return kx < ky;
        return x.second < y.second;
      });
      for (const auto& [slot, d] : ms) new_rot[r].push_back(d);
    }
  }

  CutComplex out;
  out.graph = RibbonGraph(next_region, edge_list_new, new_rot);
  out.dart_parent.assign(2 * new_edges.size(), -1);
  for (int ne = 0; ne < static_cast<int>(new_edges.size()); ++ne) {
    out.dart_parent[2 * ne] = 2 * new_edges[ne].parent_edge;
    out.dart_parent[2 * ne + 1] = 2 * new_edges[ne].parent_edge + 1;
  }

  // Components.
  std::vector<int> comp(next_region, -1);
  int nc = 0;
  for (int r = 0; r < next_region; ++r) {
    if (comp[r] != -1) continue;
    std::vector<int> stack = {r};
    comp[r] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int d : out.graph.rotation(x)) {
        int y = out.graph.vert(RibbonGraph::twin(d));
        if (comp[y] == -1) {
          comp[y] = nc;
          stack.push_back(y);
        }
      }
    }
    ++nc;
  }
  out.n_components = nc;
  out.vertex_component = comp;

  // Face identification: project each new face word to parent darts and
  // match against original boundary faces; the rest run along cut curves.
  auto canon_cycle = [](std::vector<int> w) {
    if (w.empty()) return w;
    std::vector<int> best = w;
    int n = static_cast<int>(w.size());
    for (int s = 1; s < n; ++s) {
      std::vector<int> cand(n);
      for (int i = 0; i < n; ++i) cand[i] = w[(s + i) % n];
      if (cand < best) best = cand;
    }
    return best;
  };
  std::map<std::vector<int>, int> original_faces;
  for (int f = 0; f < g.num_faces(); ++f)
    original_faces[canon_cycle(g.face_word(f))] = f;

  int nf = out.graph.num_faces();
  out.face_origin.assign(nf, -1);
  out.face_cut.assign(nf, {-1, -1});
  out.face_component.assign(nf, -1);
  std::map<std::vector<int>, std::vector<int>> cut_faces_by_item_side;
  for (int f = 0; f < nf; ++f) {
    const auto& w = out.graph.face_word(f);
    out.face_component[f] = comp[out.graph.vert(w[0])];
    std::vector<int> projected;
    for (int d : w) projected.push_back(out.dart_parent[d]);
    auto itr = original_faces.find(canon_cycle(projected));
    if (itr != original_faces.end() &&
        static_cast<int>(g.face_word(itr->second).size()) ==
            static_cast<int>(w.size())) {
      out.face_origin[f] = itr->second;
      original_faces.erase(itr);  // each original face survives exactly once
      continue;
    }
    // Runs along some cut curve: find a bounding strand. The face word uses
    // sub-band darts; a sub-band bounded by strand (it, pos) identifies the
    // curve. Side resolved by which wall of the sub-band the face hugs.
    int it_found = -1, side = -1;
    for (int d : w) {
      int ne = d >> 1;
      const auto& E = new_edges[ne];
      const auto& strands = arr.band_order(E.parent_edge);
      int m = static_cast<int>(strands.size());
      if (m == 0) continue;
      // The face walk along dart d of sub-band E.sub: which side strand?
      // Walking the new face keeps the face on a fixed side of the walk; we
      // can identify the curve by either bounding strand; prefer lower wall.
      if (E.sub > 0) {
        it_found = strands[E.sub - 1].first;
        side = 0;  // face sits on the "right" wall of that strand
        // direction refinement below
        int sd = items[it_found].darts[strands[E.sub - 1].second];
        side = (sd % 2 == 0) ? 0 : 1;
        break;
      }
      if (E.sub < m) {
        it_found = strands[E.sub].first;
        int sd = items[it_found].darts[strands[E.sub].second];
        side = (sd % 2 == 0) ? 1 : 0;
        break;
      }
    }
    require(it_found >= 0, ErrorKind::Internal,
            "cut face matches no original face and no curve side");
    out.face_cut[f] = {it_found, side};
  }
  require(original_faces.empty(), ErrorKind::Internal,
          "some original boundary face vanished during the cut");

  return out;
}

}  // namespace cnp
