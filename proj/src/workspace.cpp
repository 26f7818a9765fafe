#include "herd/workspace.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace herd {

void Workspace::validate() const {
  if (bounds.width() <= 0.0 || bounds.height() <= 0.0)
    throw std::runtime_error("workspace: empty bounds");
  for (const auto& poly : obstacles) {
    if (poly.size() < 3) throw std::runtime_error("workspace: degenerate polygon");
    for (const auto& v : poly) {
      if (!v.finite()) throw std::runtime_error("workspace: non-finite vertex");
      if (!bounds.contains(v))
        throw std::runtime_error("workspace: obstacle vertex out of bounds");
    }
    // Goal disk must not touch any obstacle.
    if (point_in_polygon(goal_center, poly) ||
        distance_to_polygon(goal_center, poly) < goal_radius)
      throw std::runtime_error("workspace: goal disk intersects obstacle");
  }
  if (!bounds.contains(goal_center))
    throw std::runtime_error("workspace: goal center out of bounds");
}

bool segment_clear(const Vec2& p, const Vec2& q, const Workspace& ws) {
  for (const auto& poly : ws.obstacles) {
    if (segment_hits_polygon(p, q, poly)) return false;
  }
  return true;
}

void save_workspace(const Workspace& ws, std::ostream& os) {
  os.precision(17);
  os << "herdworld 1\n";
  os << "bounds " << ws.bounds.min_x << ' ' << ws.bounds.min_y << ' '
     << ws.bounds.max_x << ' ' << ws.bounds.max_y << '\n';
  os << "goal " << ws.goal_center.x << ' ' << ws.goal_center.y << ' '
     << ws.goal_radius << '\n';
  if (ws.start_anchor)
    os << "anchor " << ws.start_anchor->x << ' ' << ws.start_anchor->y << '\n';
  for (const auto& poly : ws.obstacles) {
    os << "poly " << poly.size();
    for (const auto& v : poly) os << ' ' << v.x << ' ' << v.y;
    os << '\n';
  }
}

void save_workspace(const Workspace& ws, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  save_workspace(ws, f);
}

Workspace load_workspace(std::istream& is) {
  Workspace ws;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "herdworld") {
      header_seen = true;
    } else if (tag == "bounds") {
      ss >> ws.bounds.min_x >> ws.bounds.min_y >> ws.bounds.max_x >> ws.bounds.max_y;
    } else if (tag == "goal") {
      ss >> ws.goal_center.x >> ws.goal_center.y >> ws.goal_radius;
    } else if (tag == "anchor") {
      Vec2 a;
      ss >> a.x >> a.y;
      ws.start_anchor = a;
    } else if (tag == "poly") {
      std::size_t n = 0;
      ss >> n;
      Polygon poly(n);
      for (auto& v : poly) ss >> v.x >> v.y;
      if (!ss) throw std::runtime_error("workspace file: truncated poly line");
      ws.obstacles.push_back(std::move(poly));
    } else {
      throw std::runtime_error("workspace file: unknown tag '" + tag + "'");
    }
  }
  if (!header_seen) throw std::runtime_error("workspace file: missing header");
  ws.validate();
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return load_workspace(f);
}

}  // namespace herd
