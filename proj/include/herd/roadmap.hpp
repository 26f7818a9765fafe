#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "herd/workspace.hpp"

namespace herd {

struct RoadmapEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  double length = 0.0;
};

// Sampled free-space graph: one third uniform samples, two thirds retracted
// onto the medial axis, k-nearest connections through collision-free edges.
struct Roadmap {
  std::vector<Vec2> nodes;
  std::vector<RoadmapEdge> edges;
  std::size_t n_uniform = 0;
  std::size_t n_medial = 0;
  // adjacency[i] = list of (neighbor index, edge length)
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;
};

struct GeodesicResult {
  double length = 0.0;
  std::vector<Vec2> waypoints;
  Vec2 sub_goal;
};

// Medial-axis retraction: moves p away from its nearest obstacle/boundary
// feature until two distinct features are equidistant within tolerance.
// Returns nullopt when the march leaves free space or fails to converge.
std::optional<Vec2> retract_to_medial_axis(const Vec2& p, const Workspace& ws,
                                           double tolerance = 0.5,
                                           int max_iters = 64);

Roadmap build_roadmap(const Workspace& ws, std::size_t n_samples,
                      std::size_t k_neighbors, std::uint64_t seed);

// Shortest obstacle-respecting path from `from` to `to` through the roadmap.
// A clear straight segment short-circuits the graph. Throws
// std::runtime_error (with nearest-node diagnostics) when an endpoint cannot
// be connected or no path exists.
GeodesicResult geodesic_path(const Roadmap& rm, const Workspace& ws,
                             const Vec2& from, const Vec2& to);

// Debug dump: polygons, nodes with their source, and edges.
void dump_roadmap(const Roadmap& rm, const Workspace& ws, const std::string& path);

}  // namespace herd
