#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnp/curves.hpp"
#include "cnp/rng.hpp"

namespace cnp {

struct PeripheralityCertificate {
  bool nonperipheral = false;
  std::string rule;  // the deciding rule
  std::optional<EndPartition> partition;  // separating case
};

// Separating curves are non-peripheral iff both complementary end sets are
// not small (with the window genus of a side blocking a push into a planar
// block); non-separating ones iff the surface has finite genus.
PeripheralityCertificate is_nonperipheral(const Window& w, const Curve& c);

struct BallParams {
  int cap = 24;          // max crossing-word length admitted
  int radius = 4;
  int max_vertices = 200000;
};

std::vector<Curve> cnp_neighbors(const Window& w, const Curve& c,
                                 const BallParams& params);

struct CnpBall {
  Curve center;
  int radius = 0;
  int window_level = 0;
  int complexity_cap = 0;
  std::vector<Curve> vertices;              // index 0 = center
  std::vector<std::pair<int, int>> edges;   // disjointness edges
  std::vector<int> dist;                    // BFS distance from center

  int vertex_index(const Curve& c) const;
};

CnpBall cnp_ball(const Window& w, const Curve& center,
                 const BallParams& params);

// Exact BFS distance within the capped windowed graph; nullopt when b is
// unreachable inside the ball.
std::optional<int> cnp_distance(const Window& w, const Curve& a,
                                const Curve& b, const BallParams& params);

struct SurgeryPath {
  std::vector<Curve> vertices;  // consecutive entries disjoint
  std::vector<PeripheralityCertificate> certificates;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Constructive path in the non-peripheral curve graph with the 2i+2 bound.
SurgeryPath surgery_path(const Curve& a, const Curve& b, const Window& w);

struct DeltaProbe {
  double delta = 0.0;      // max four-point defect over sampled quadruples
  int samples = 0;
  int ball_size = 0;
};

DeltaProbe hyperbolicity_probe(const CnpBall& ball, int samples,
                               uint64_t seed);

}  // namespace cnp
