#include "cnp/curves.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cnp/peripherality.hpp"

namespace cnp {

Curve reduce(const Window& w, Curve c) {
  c.word.closed = true;
  c.word = canonical_form(w.dual(), c.word);
  require(!c.word.darts.empty(), ErrorKind::NullHomotopic,
          "curve word is null-homotopic");
  require(is_primitive(c.word), ErrorKind::NotSimple,
          "curve word is a proper power");
  require(self_intersection_number(w.dual(), c.word) == 0,
          ErrorKind::NotSimple, "curve word has an essential self-crossing");
  c.normalized = true;
  c.window_level = w.level;
  return c;
}

Curve make_curve(const Window& w, std::vector<int> darts) {
  Curve c;
  c.word.closed = true;
  c.word.darts = std::move(darts);
  return reduce(w, c);
}

bool is_boundary_parallel(const Window& w, const Curve& c) {
  const auto& g = w.dual();
  DartPath cc = canonical_form(g, c.word);
  for (int f = 0; f < g.num_faces(); ++f) {
    DartPath fw;
    fw.closed = true;
    fw.darts = g.face_word(f);
    if (canonical_form(g, fw).darts == cc.darts) return true;
  }
  return false;
}

bool is_essential(const Window& w, const Curve& c) {
  return !c.word.darts.empty() && !is_boundary_parallel(w, c);
}

int intersection_number(const Window& w, const Curve& a, const Curve& b) {
  require(a.window_level == b.window_level, ErrorKind::LevelMismatch,
          "curves live on different window levels");
  return intersection_number(w.dual(), a.word, b.word);
}

bool is_separating(const Window& w, const Curve& c) {
  require(is_essential(w, c), ErrorKind::BadInput,
          "separation test needs an essential curve");
  auto cut = cut_along(w.dual(), {c.word});
  return cut.n_components == 2;
}

namespace {

ClopenProfile side_profile(const Window& w, const std::vector<int>& faces) {
  const EndSpace& s = w.space();
  std::set<int> fs(faces.begin(), faces.end());
  ClopenProfile p;
  for (const auto& o : s.orbits()) {
    const auto& carr = w.carriers(o.id);
    int inside = 0;
    for (int f : carr)
      if (fs.count(f)) ++inside;
    Content c = inside == 0 ? Content::None
                : inside == static_cast<int>(carr.size()) ? Content::All
                                                          : Content::Partial;
    switch (o.maximal_kind) {
      case MaximalKind::IsolatedMaximal:
        if (c != Content::None) p.isolated_max_contained.insert(o.id);
        break;
      case MaximalKind::CantorMaximal:
        p.cantor_content[o.id] = c;
        break;
      case MaximalKind::NotMaximal:
        p.nonmax_content[o.id] = c;
        break;
    }
  }
  return normalize_profile(s, p);
}

Genus side_genus(const Window& w, int window_genus_side,
                 const std::vector<int>& faces) {
  for (int f : faces)
    if (!w.label(f).planar) return Genus::inf();
  return Genus::finite(window_genus_side);
}

}  // namespace

EndPartition end_partition(const Window& w, const Curve& c) {
  auto cut = cut_along(w.dual(), {c.word});
  require(cut.n_components == 2, ErrorKind::NotSeparating,
          "end partition of a non-separating curve");
  EndPartition ep;
  std::vector<int> f0, f1;
  for (int f = 0; f < cut.graph.num_faces(); ++f) {
    if (cut.face_origin[f] < 0) continue;
    (cut.face_component[f] == 0 ? f0 : f1).push_back(cut.face_origin[f]);
  }
  // deterministic side naming: side one holds window face 0's label
  bool zero_first =
      std::find(f0.begin(), f0.end(), 0) != f0.end() || f1.empty();
  std::vector<int> c_one = zero_first ? f0 : f1;
  std::vector<int> c_two = zero_first ? f1 : f0;
  int comp_one = zero_first ? 0 : 1;
  ep.faces_one = c_one;
  ep.faces_two = c_two;
  ep.side_one = side_profile(w, c_one);
  ep.side_two = side_profile(w, c_two);
  ep.genus_one = side_genus(w, cut.component_genus(comp_one), c_one);
  ep.genus_two = side_genus(w, cut.component_genus(1 - comp_one), c_two);
  return ep;
}

Curve twist_image(const Window& w, const Curve& curve, const Curve& axis,
                  int power) {
  require(curve.window_level == axis.window_level, ErrorKind::LevelMismatch,
          "twist across window levels");
  if (power == 0) return reduce(w, curve);
  const auto& g = w.dual();
  DartPath c = canonical_form(g, curve.word);
  DartPath a = canonical_form(g, axis.word);
  require(self_intersection_number(g, a) == 0, ErrorKind::NotSimple,
          "twist axis is not simple");
  if (c.darts == a.darts) return reduce(w, curve);  // twist fixes its axis
  Arrangement arr(g, {c, a});
  auto xs = arr.crossing_list(0, 1);
  if (xs.empty()) return reduce(w, curve);
  // group crossings by position along c, ordered along each chord
  std::sort(xs.begin(), xs.end(), [](const Crossing& x, const Crossing& y) {
    if (x.pos_a != y.pos_a) return x.pos_a < y.pos_a;
    return x.ord_a < y.ord_a;
  });
  int n = a.size();
  std::vector<int> out;
  size_t k = 0;
  for (int i = 0; i < c.size(); ++i) {
    while (k < xs.size() && xs[k].pos_a == i) {
      // insert |power| copies of the axis loop based at this crossing,
      // oriented by the crossing sign and the twist direction
      bool forward = (power > 0) == (xs[k].sign > 0);
      for (int rep = 0; rep < std::abs(power); ++rep) {
        if (forward)
          for (int t = 0; t < n; ++t)
            out.push_back(a.darts[(xs[k].pos_b + t) % n]);
        else
          for (int t = 0; t < n; ++t)
            out.push_back(RibbonGraph::twin(
                a.darts[((xs[k].pos_b - 1 - t) % n + 2 * n) % n]));
      }
      ++k;
    }
    out.push_back(c.darts[i]);
  }
  Curve res;
  res.word.closed = true;
  res.word.darts = std::move(out);
  return reduce(w, res);
}

std::optional<Curve> curve_around_faces(const Window& w,
                                        const std::set<int>& faces) {
  std::set<int> fs = faces;
  if (fs.count(w.root_face())) {
    std::set<int> comp;
    for (int f = 0; f < w.num_boundaries(); ++f)
      if (!fs.count(f)) comp.insert(f);
    fs = comp;
  }
  if (fs.empty() || static_cast<int>(fs.size()) == w.num_boundaries())
    return std::nullopt;
  std::vector<int> rows;
  for (int r = 0; r < static_cast<int>(w.row_faces().size()); ++r)
    if (fs.count(w.row_faces()[r])) rows.push_back(r);
  auto word = w.enclosing_curve(rows, 0);
  if (word.darts.empty()) return std::nullopt;
  Curve c;
  c.word = word;
  try {
    c = reduce(w, c);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!is_essential(w, c)) return std::nullopt;
  return c;
}

// --- enumeration -------------------------------------------------------------

std::vector<Curve> enumerate_simple_curves(const Window& w, int cap) {
  const auto& g = w.dual();
  std::set<std::vector<int>> seen;
  std::vector<Curve> out;
  int D = g.num_darts();

  std::set<std::vector<int>> boundary;
  for (int f = 0; f < g.num_faces(); ++f) {
    DartPath fw;
    fw.closed = true;
    fw.darts = g.face_word(f);
    boundary.insert(canonical_form(g, fw).darts);
  }

  std::vector<int> word;
  word.reserve(cap);

  std::function<void(int)> dfs = [&](int start) {
    int cur = word.back();
    int v = g.vert(RibbonGraph::twin(cur));  // arrival vertex
    if (static_cast<int>(word.size()) >= 2 && v == g.vert(start) &&
        word.back() != RibbonGraph::twin(start)) {
      DartPath p;
      p.closed = true;
      p.darts = word;
      DartPath canon = canonical_form(g, p);
      if (canon.darts == word && !seen.count(canon.darts)) {
        seen.insert(canon.darts);
        if (is_primitive(canon) && !boundary.count(canon.darts) &&
            self_intersection_number(g, canon) == 0) {
          Curve c;
          c.word = canon;
          c.normalized = true;
          c.window_level = w.level;
          out.push_back(c);
        }
      }
    }
    if (static_cast<int>(word.size()) >= cap) return;
    for (int i = 0; i < g.rot_size(v); ++i) {
      int d = g.rot_at(v, i);
      if (d == RibbonGraph::twin(cur)) continue;  // no backtrack
      if (d < start) continue;  // canonical words start at their least dart
      word.push_back(d);
      dfs(start);
      word.pop_back();
    }
  };

  for (int start = 0; start < D; ++start) {
    word.clear();
    word.push_back(start);
    dfs(start);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- surgery -----------------------------------------------------------------

namespace {

std::vector<int> segment(const DartPath& p, int from, int to) {
  std::vector<int> out;
  int n = p.size();
  int i = ((from % n) + n) % n;
  to = ((to % n) + n) % n;
  if (i == to) {  // full cycle
    for (int k = 0; k < n; ++k) out.push_back(p.darts[(i + k) % n]);
    return out;
  }
  while (i != to) {
    out.push_back(p.darts[i]);
    i = (i + 1) % n;
  }
  return out;
}

std::vector<int> invert(const std::vector<int>& wrd) {
  std::vector<int> out;
  for (auto it = wrd.rbegin(); it != wrd.rend(); ++it)
    out.push_back(RibbonGraph::twin(*it));
  return out;
}

Curve from_word(const Window& w, std::vector<int> darts) {
  Curve c;
  c.word.closed = true;
  c.word.darts = std::move(darts);
  return reduce(w, c);
}

// Boundary words of a regular neighborhood of gamma union a subarc of alpha
// whose endpoints and interior crossings with gamma are the given crossings
// (in alpha order). The neighborhood is traced as a small ribbon graph whose
// rotations come from the exact disk token order of the arrangement.
std::vector<Curve> neighborhood_boundaries(const Window& w,
                                           const Arrangement& arr,
                                           const DartPath& alpha,
                                           const DartPath& gamma,
                                           const std::vector<Crossing>& used) {
  const auto& g = w.dual();
  int m = static_cast<int>(used.size());
  require(m >= 2, ErrorKind::Internal, "surgery arc needs two endpoints");

  std::vector<int> gorder(m);
  for (int i = 0; i < m; ++i) gorder[i] = i;
  std::sort(gorder.begin(), gorder.end(), [&](int x, int y) {
    if (used[x].pos_b != used[y].pos_b) return used[x].pos_b < used[y].pos_b;
    return used[x].ord_b < used[y].ord_b;
  });

  struct MiniEdge {
    int u, v;
    std::vector<int> word;  // window darts, traversed u -> v
    bool on_gamma;
  };
  std::vector<MiniEdge> medges;
  for (int k = 0; k < m; ++k) {
    int x = gorder[k], y = gorder[(k + 1) % m];
    MiniEdge e;
    e.u = x;
    e.v = y;
    e.on_gamma = true;
    e.word = segment(gamma, used[x].pos_b, used[y].pos_b);
    medges.push_back(std::move(e));
  }
  for (int k = 0; k + 1 < m; ++k) {
    MiniEdge e;
    e.u = k;
    e.v = k + 1;
    e.on_gamma = false;
    e.word = segment(alpha, used[k].pos_a, used[k + 1].pos_a);
    medges.push_back(std::move(e));
  }

  struct MiniDart {
    int edge, endwhich;
    int tokpos;
  };
  std::vector<std::vector<MiniDart>> at(m);
  for (int ei = 0; ei < static_cast<int>(medges.size()); ++ei) {
    const auto& e = medges[ei];
    int item = e.on_gamma ? 1 : 0;
    int pos_u = e.on_gamma ? used[e.u].pos_b : used[e.u].pos_a;
    int pos_v = e.on_gamma ? used[e.v].pos_b : used[e.v].pos_a;
    auto [vu, inu, outu] = arr.chord_at(item, pos_u);
    auto [vv, inv, outv] = arr.chord_at(item, pos_v);
    (void)inu;
    (void)outv;
    (void)vu;
    (void)vv;
    at[e.u].push_back({ei, 0, outu});
    at[e.v].push_back({ei, 1, inv});
  }

  std::vector<std::pair<int, int>> mini_edge_list;
  for (const auto& e : medges) mini_edge_list.push_back({e.u, e.v});
  std::vector<std::vector<int>> rot(m);
  for (int k = 0; k < m; ++k) {
    auto ds = at[k];
    std::sort(ds.begin(), ds.end(),
              [](const MiniDart& x, const MiniDart& y) {
                return x.tokpos < y.tokpos;
              });
    for (const auto& d : ds) rot[k].push_back(2 * d.edge + d.endwhich);
  }
  RibbonGraph mini(m, mini_edge_list, rot);

  std::vector<Curve> out;
  for (int f = 0; f < mini.num_faces(); ++f) {
    std::vector<int> word;
    for (int d : mini.face_word(f)) {
      const auto& e = medges[RibbonGraph::edge_of(d)];
      if (d % 2 == 0)
        word.insert(word.end(), e.word.begin(), e.word.end());
      else {
        auto inv_w = invert(e.word);
        word.insert(word.end(), inv_w.begin(), inv_w.end());
      }
    }
    DartPath p;
    p.closed = true;
    p.darts = word;
    p = reduce_path(g, p);
    if (p.darts.empty()) continue;
    Curve c;
    c.word = p;
    try {
      c = reduce(w, c);
    } catch (const Error&) {
      continue;  // non-simple boundary word: unusable candidate
    }
    if (!is_essential(w, c)) continue;
    out.push_back(c);
  }
  return out;
}

int min_side_zeta(const Window& w, const Curve& c) {
  auto ep = end_partition(w, c);
  return std::min(zeta_clopen(ep.side_one, w.space()),
                  zeta_clopen(ep.side_two, w.space()));
}

}  // namespace

Curve surgery_step(const Curve& alpha, const Curve& gamma, const Window& w) {
  const auto& g = w.dual();
  DartPath a = canonical_form(g, alpha.word);
  DartPath c = canonical_form(g, gamma.word);
  int total = intersection_number(g, a, c);
  require(total >= 1, ErrorKind::BadInput,
          "surgery needs intersecting curves");
  Arrangement arr(g, {a, c});
  auto xs = arr.crossing_list(0, 1);
  std::sort(xs.begin(), xs.end(), [](const Crossing& x, const Crossing& y) {
    if (x.pos_a != y.pos_a) return x.pos_a < y.pos_a;
    return x.ord_a < y.ord_a;
  });
  int k = static_cast<int>(xs.size());

  if (total == 1) {
    // boundary of a neighborhood of alpha u gamma bounds a once-punctured
    // torus; it is the commutator loop based at the crossing
    std::vector<int> aseg = segment(a, xs[0].pos_a, xs[0].pos_a);
    std::vector<int> gseg = segment(c, xs[0].pos_b, xs[0].pos_b);
    std::vector<int> word = aseg;
    word.insert(word.end(), gseg.begin(), gseg.end());
    auto ai = invert(aseg);
    word.insert(word.end(), ai.begin(), ai.end());
    auto gi = invert(gseg);
    word.insert(word.end(), gi.begin(), gi.end());
    Curve beta = from_word(w, word);
    require(is_essential(w, beta), ErrorKind::Internal,
            "degenerate once-punctured torus boundary");
    auto cert = is_nonperipheral(w, beta);
    require(cert.nonperipheral, ErrorKind::Internal,
            "once-punctured torus boundary came out peripheral");
    return beta;
  }

  std::vector<Curve> candidates;
  auto harvest = [&](const std::vector<Curve>& cands) {
    for (const auto& b : cands) {
      if (b.word.darts == c.darts || b.word.darts == a.darts) continue;
      if (intersection_number(g, b.word, a) >= total) continue;
      if (!is_nonperipheral(w, b).nonperipheral) continue;
      candidates.push_back(b);
    }
  };

  for (int s = 0; s < k && candidates.empty(); ++s) {
    const Crossing& q0 = xs[s];
    const Crossing& q1 = xs[(s + 1) % k];
    if (q1.sign == q0.sign) {
      // the arc returns on the other side: omega u gamma-arc meets gamma once
      std::vector<int> om = segment(a, q0.pos_a, q1.pos_a);
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> word = om;
        std::vector<int> gseg = dir == 0
                                    ? segment(c, q1.pos_b, q0.pos_b)
                                    : invert(segment(c, q0.pos_b, q1.pos_b));
        word.insert(word.end(), gseg.begin(), gseg.end());
        try {
          Curve beta = from_word(w, word);
          if (is_essential(w, beta)) harvest({beta});
        } catch (const Error&) {
        }
      }
    } else if (k >= 3) {
      // same-side return: extend to the next crossing, interior meets once
      const Crossing& q2 = xs[(s + 2) % k];
      std::vector<Crossing> used = {q0, q1, q2};
      auto cands = neighborhood_boundaries(w, arr, a, c, used);
      harvest(cands);
    }
  }

  require(!candidates.empty(), ErrorKind::HypothesisViolation,
          "no surgery candidate; the doubly-separating case needs "
          "zeta(Sigma) >= 5");
  std::sort(candidates.begin(), candidates.end(),
            [&](const Curve& x, const Curve& y) {
              bool sx = is_separating(w, x), sy = is_separating(w, y);
              int zx = sx ? min_side_zeta(w, x) : -1;
              int zy = sy ? min_side_zeta(w, y) : -1;
              if (zx != zy) return zx > zy;
              return x.word < y.word;
            });
  return candidates.front();
}

}  // namespace cnp
