#include "cnp/peripherality.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cnp {

namespace {

// Can this complementary side be carried off the anchor window entirely?
// The end content must fit a single block, and any genus on the side needs
// an infinite-genus component to receive it.
bool side_pushable(const Window& w, const ClopenProfile& ends, Genus genus) {
  const EndSpace& s = w.space();
  bool genus_free = !genus.infinite && genus.value == 0;
  for (const auto& b : fitting_blocks(ends, s)) {
    if (genus_free || block_nonplanar(b, s)) return true;
  }
  return false;
}

}  // namespace

PeripheralityCertificate is_nonperipheral(const Window& w, const Curve& c) {
  PeripheralityCertificate cert;
  require(is_essential(w, c), ErrorKind::BadInput,
          "peripherality test needs an essential curve");
  if (!is_separating(w, c)) {
    bool finite = !w.space().genus().infinite;
    cert.nonperipheral = finite;
    cert.rule = finite ? "non-separating and genus finite"
                       : "non-separating and genus infinite";
    return cert;
  }
  auto ep = end_partition(w, c);
  bool push1 = side_pushable(w, ep.side_one, ep.genus_one);
  bool push2 = side_pushable(w, ep.side_two, ep.genus_two);
  cert.partition = ep;
  cert.nonperipheral = !push1 && !push2;
  if (push1 || push2)
    cert.rule = std::string("side ") + (push1 ? "one" : "two") +
                " fits a single anchor block";
  else
    cert.rule = "both sides are not small";
  return cert;
}

namespace {

// Cache of enumerated and certified curves per (window identity, cap).
struct Inventory {
  std::vector<Curve> np;  // non-peripheral curves, canonical order
};

const Inventory& inventory(const Window& w, int cap) {
  static std::map<std::tuple<const Window*, int, int>, Inventory> cache;
  auto key = std::make_tuple(&w, w.level, cap);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Inventory inv;
  for (auto& c : enumerate_simple_curves(w, cap))
    if (is_nonperipheral(w, c).nonperipheral) inv.np.push_back(c);
  return cache.emplace(key, std::move(inv)).first->second;
}

}  // namespace

std::vector<Curve> cnp_neighbors(const Window& w, const Curve& c,
                                 const BallParams& params) {
  require(is_nonperipheral(w, c).nonperipheral, ErrorKind::BadInput,
          "neighbors of a peripheral curve");
  std::vector<Curve> out;
  for (const auto& v : inventory(w, params.cap).np) {
    if (v.word.darts == c.word.darts) continue;
    if (intersection_number(w, v, c) == 0) out.push_back(v);
  }
  return out;
}

int CnpBall::vertex_index(const Curve& c) const {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (vertices[i].word.darts == c.word.darts) return i;
  return -1;
}

CnpBall cnp_ball(const Window& w, const Curve& center,
                 const BallParams& params) {
  CnpBall ball;
  ball.center = reduce(w, center);
  ball.radius = params.radius;
  ball.window_level = w.level;
  ball.complexity_cap = params.cap;

  const auto& all = inventory(w, params.cap).np;
  std::map<std::vector<int>, int> index;
  ball.vertices.push_back(ball.center);
  ball.dist.push_back(0);
  index[ball.center.word.darts] = 0;

  std::deque<int> frontier = {0};
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    if (ball.dist[u] >= params.radius) continue;
    for (const auto& v : all) {
      if (static_cast<int>(ball.vertices.size()) > params.max_vertices)
        fail(ErrorKind::CapExceeded, "ball enumeration truncated");
      auto it = index.find(v.word.darts);
      if (it != index.end()) continue;
      if (intersection_number(w, ball.vertices[u], v) != 0) continue;
      int id = static_cast<int>(ball.vertices.size());
      ball.vertices.push_back(v);
      ball.dist.push_back(ball.dist[u] + 1);
      index[v.word.darts] = id;
      frontier.push_back(id);
    }
  }
  // induced edges
  int n = static_cast<int>(ball.vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersection_number(w, ball.vertices[i], ball.vertices[j]) == 0)
        ball.edges.push_back({i, j});
  return ball;
}

std::optional<int> cnp_distance(const Window& w, const Curve& a,
                                const Curve& b, const BallParams& params) {
  Curve ca = reduce(w, a), cb = reduce(w, b);
  if (ca.word.darts == cb.word.darts) return 0;
  if (intersection_number(w, ca, cb) == 0) return 1;
  // BFS over the capped inventory, plus the two endpoints
  std::vector<Curve> verts = inventory(w, params.cap).np;
  auto ensure = [&](const Curve& c) {
    for (const auto& v : verts)
      if (v.word.darts == c.word.darts) return;
    verts.push_back(c);
  };
  ensure(ca);
  ensure(cb);
  int n = static_cast<int>(verts.size());
  int src = -1, dst = -1;
  for (int i = 0; i < n; ++i) {
    if (verts[i].word.darts == ca.word.darts) src = i;
    if (verts[i].word.darts == cb.word.darts) dst = i;
  }
  std::vector<int> dist(n, -1);
  std::deque<int> q = {src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == dst) return dist[u];
    if (dist[u] >= params.radius) continue;
    for (int v = 0; v < n; ++v) {
      if (dist[v] != -1) continue;
      if (intersection_number(w, verts[u], verts[v]) != 0) continue;
      dist[v] = dist[u] + 1;
      q.push_back(v);
    }
  }
  return std::nullopt;  // unreachable within the cap and radius
}

SurgeryPath surgery_path(const Curve& a, const Curve& b, const Window& w) {
  require(zeta_surface(w.space()) >= 5, ErrorKind::HypothesisViolation,
          "connectivity construction needs zeta(Sigma) >= 5");
  auto cert_a = is_nonperipheral(w, a);
  auto cert_b = is_nonperipheral(w, b);
  require(cert_a.nonperipheral && cert_b.nonperipheral,
          ErrorKind::BadInput, "surgery path endpoints must be non-peripheral");

  std::function<std::vector<Curve>(const Curve&, const Curve&)> walk =
      [&](const Curve& x, const Curve& y) -> std::vector<Curve> {
    if (x.word.darts == y.word.darts) return {x};
    int i = intersection_number(w, x, y);
    if (i == 0) return {x, y};
    if (i == 1) {
      Curve beta = surgery_step(x, y, w);
      require(intersection_number(w, beta, x) == 0 &&
                  intersection_number(w, beta, y) == 0,
              ErrorKind::Internal, "torus boundary must be disjoint from both");
      return {x, beta, y};
    }
    Curve beta = surgery_step(x, y, w);
    int drop = intersection_number(w, beta, x);
    require(drop < i, ErrorKind::Internal, "surgery failed to reduce");
    auto head = walk(x, beta);
    int ib = intersection_number(w, beta, y);
    if (ib == 0) {
      head.push_back(y);
      return head;
    }
    require(ib == 1, ErrorKind::Internal,
            "surgery candidate meets the target more than once");
    Curve bridge = surgery_step(beta, y, w);
    head.push_back(bridge);
    head.push_back(y);
    return head;
  };

  SurgeryPath path;
  path.vertices = walk(reduce(w, a), reduce(w, b));
  for (size_t i = 0; i < path.vertices.size(); ++i) {
    auto cert = is_nonperipheral(w, path.vertices[i]);
    require(cert.nonperipheral, ErrorKind::Internal,
            "peripheral vertex on a surgery path");
    path.certificates.push_back(cert);
    if (i + 1 < path.vertices.size())
      require(intersection_number(w, path.vertices[i],
                                  path.vertices[i + 1]) == 0,
              ErrorKind::Internal, "non-adjacent consecutive path vertices");
  }
  return path;
}

DeltaProbe hyperbolicity_probe(const CnpBall& ball, int samples,
                               uint64_t seed) {
  int n = static_cast<int>(ball.vertices.size());
  require(n >= 2, ErrorKind::DisconnectedBall, "ball too small to probe");
  // all-pairs BFS
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : ball.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q = {s};
    dist[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u])
        if (dist[s][v] == -1) {
          dist[s][v] = dist[s][u] + 1;
          q.push_back(v);
        }
    }
    for (int t = 0; t < n; ++t)
      require(dist[s][t] >= 0, ErrorKind::DisconnectedBall,
              "ball graph is disconnected");
  }
  DeltaProbe probe;
  probe.ball_size = n;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    int w = static_cast<int>(rng.below(n)), x = static_cast<int>(rng.below(n)),
        y = static_cast<int>(rng.below(n)), z = static_cast<int>(rng.below(n));
    int s1 = dist[w][x] + dist[y][z];
    int s2 = dist[w][y] + dist[x][z];
    int s3 = dist[w][z] + dist[x][y];
    int hi = std::max({s1, s2, s3});
    int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
    double defect = (hi - mid) / 2.0;
    probe.delta = std::max(probe.delta, defect);
    ++probe.samples;
  }
  return probe;
}

}  // namespace cnp
