#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "herd/geometry.hpp"

namespace herd {

// Bounded 2D world with polygonal obstacles and a circular goal region.
struct Workspace {
  Rect bounds;
  std::vector<Polygon> obstacles;
  Vec2 goal_center;
  double goal_radius = 30.0;
  // Designated group start position for fixed/layered worlds.
  std::optional<Vec2> start_anchor;

  bool in_bounds(const Vec2& p) const { return bounds.contains(p); }

  bool inside_obstacle(const Vec2& p) const {
    for (const auto& poly : obstacles)
      if (point_in_polygon(p, poly)) return true;
    return false;
  }

  // Free space = inside bounds and outside every obstacle.
  bool in_free_space(const Vec2& p) const {
    return in_bounds(p) && !inside_obstacle(p);
  }

  bool in_goal(const Vec2& p) const {
    return distance(p, goal_center) <= goal_radius;
  }

  // Throws std::runtime_error if an invariant is broken (obstacle out of
  // bounds, goal disk overlapping an obstacle).
  void validate() const;
};

// True iff segment pq crosses no obstacle polygon. Touching an edge or a
// vertex counts as blocked.
bool segment_clear(const Vec2& p, const Vec2& q, const Workspace& ws);

// Text serialization consumed by the CLI render/eval commands.
void save_workspace(const Workspace& ws, std::ostream& os);
void save_workspace(const Workspace& ws, const std::string& path);
Workspace load_workspace(std::istream& is);
Workspace load_workspace(const std::string& path);

}  // namespace herd
