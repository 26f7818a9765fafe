#include "herd/roadmap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "herd/rng.hpp"

namespace herd {

namespace {

// A clearance feature is an obstacle polygon or one of the four boundary
// walls. Distances to distinct features define the medial axis.
struct FeatureHit {
  int id = -1;
  double dist = 0.0;
  Vec2 witness;  // closest point on the feature
};

std::vector<FeatureHit> feature_distances(const Vec2& p, const Workspace& ws) {
  std::vector<FeatureHit> hits;
  hits.reserve(ws.obstacles.size() + 4);
  int id = 0;
  for (const auto& poly : ws.obstacles) {
    const Vec2 q = closest_point_on_polygon(p, poly);
    hits.push_back({id++, (p - q).norm(), q});
  }
  const Rect& b = ws.bounds;
  hits.push_back({id++, p.x - b.min_x, {b.min_x, p.y}});
  hits.push_back({id++, b.max_x - p.x, {b.max_x, p.y}});
  hits.push_back({id++, p.y - b.min_y, {p.x, b.min_y}});
  hits.push_back({id++, b.max_y - p.y, {p.x, b.max_y}});
  return hits;
}

// First and second nearest features at p.
std::pair<FeatureHit, FeatureHit> two_nearest(const Vec2& p, const Workspace& ws) {
  auto hits = feature_distances(p, ws);
  std::partial_sort(hits.begin(), hits.begin() + 2, hits.end(),
                    [](const FeatureHit& a, const FeatureHit& b) { return a.dist < b.dist; });
  return {hits[0], hits[1]};
}

double dist_to_feature(const Vec2& p, int id, const Workspace& ws) {
  const std::size_t n_obs = ws.obstacles.size();
  if (id >= 0 && static_cast<std::size_t>(id) < n_obs)
    return distance_to_polygon(p, ws.obstacles[id]);
  const Rect& b = ws.bounds;
  switch (id - static_cast<int>(n_obs)) {
    case 0: return p.x - b.min_x;
    case 1: return b.max_x - p.x;
    case 2: return p.y - b.min_y;
    case 3: return b.max_y - p.y;
  }
  return std::numeric_limits<double>::infinity();
}

double min_other_feature_dist(const Vec2& p, int exclude_id, const Workspace& ws) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& h : feature_distances(p, ws))
    if (h.id != exclude_id) best = std::min(best, h.dist);
  return best;
}

Vec2 sample_free_point(const Workspace& ws, Rng& rng, int max_tries = 10000) {
  for (int t = 0; t < max_tries; ++t) {
    const Vec2 p{uniform(rng, ws.bounds.min_x, ws.bounds.max_x),
                 uniform(rng, ws.bounds.min_y, ws.bounds.max_y)};
    if (ws.in_free_space(p)) return p;
  }
  throw std::runtime_error("build_roadmap: free space too small to sample");
}

}  // namespace

std::optional<Vec2> retract_to_medial_axis(const Vec2& p, const Workspace& ws,
                                           double tolerance, int max_iters) {
  auto [f1, f2] = two_nearest(p, ws);
  if (f2.dist - f1.dist < tolerance) return p;  // already on the axis

  const Vec2 dir = (p - f1.witness).normalized();
  if (dir.norm_sq() == 0.0) return std::nullopt;  // touching the feature

  // g(t) = d(origin feature) - d(nearest other feature); the medial axis is
  // the first root along the outward ray.
  const int origin = f1.id;
  auto g = [&](double t) {
    const Vec2 q = p + dir * t;
    return dist_to_feature(q, origin, ws) - min_other_feature_dist(q, origin, ws);
  };

  const double march_limit = std::hypot(ws.bounds.width(), ws.bounds.height());
  double lo = 0.0;
  double hi = 0.0;
  double step = std::max(tolerance, (f2.dist - f1.dist) * 0.5);
  bool bracketed = false;
  while (hi < march_limit) {
    const double t = hi + step;
    const Vec2 q = p + dir * t;
    if (!ws.in_free_space(q)) break;
    if (g(t) >= 0.0) {
      lo = hi;
      hi = t;
      bracketed = true;
      break;
    }
    lo = hi;
    hi = t;
    step *= 2.0;
  }
  if (!bracketed) return std::nullopt;

  for (int it = 0; it < max_iters && (hi - lo) > tolerance * 0.25; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  const Vec2 result = p + dir * hi;
  if (!ws.in_free_space(result)) return std::nullopt;
  // Converged iff the two nearest features are equidistant within tolerance.
  auto [r1, r2] = two_nearest(result, ws);
  if (r2.dist - r1.dist > tolerance) return std::nullopt;
  return result;
}

Roadmap build_roadmap(const Workspace& ws, std::size_t n_samples,
                      std::size_t k_neighbors, std::uint64_t seed) {
  if (n_samples < 3) throw std::invalid_argument("build_roadmap: n_samples < 3");

  Rng rng = make_rng(seed, /*stream=*/0x9d0a);
  Roadmap rm;
  const std::size_t n_uniform = (n_samples + 2) / 3;  // ceil(n/3)
  const std::size_t n_medial = n_samples - n_uniform;

  for (std::size_t i = 0; i < n_uniform; ++i)
    rm.nodes.push_back(sample_free_point(ws, rng));
  std::size_t placed = 0;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 200 * n_samples + 1000;
  while (placed < n_medial) {
    if (++attempts > max_attempts)
      throw std::runtime_error("build_roadmap: medial-axis sampling failed to converge");
    const Vec2 p = sample_free_point(ws, rng);
    const auto r = retract_to_medial_axis(p, ws);
    if (r) {
      rm.nodes.push_back(*r);
      ++placed;
    }
  }
  rm.n_uniform = n_uniform;
  rm.n_medial = n_medial;

  // k nearest neighbors per node, connected when the segment is clear.
  const std::size_t n = rm.nodes.size();
  rm.adjacency.assign(n, {});
  std::vector<std::pair<double, std::size_t>> by_dist;
  std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    by_dist.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      by_dist.emplace_back((rm.nodes[i] - rm.nodes[j]).norm_sq(), j);
    }
    const std::size_t k = std::min(k_neighbors, by_dist.size());
    std::partial_sort(by_dist.begin(), by_dist.begin() + k, by_dist.end());
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t j = by_dist[t].second;
      if (linked[i][j]) continue;
      if (!segment_clear(rm.nodes[i], rm.nodes[j], ws)) continue;
      const double len = (rm.nodes[i] - rm.nodes[j]).norm();
      rm.edges.push_back({std::min(i, j), std::max(i, j), len});
      rm.adjacency[i].emplace_back(j, len);
      rm.adjacency[j].emplace_back(i, len);
      linked[i][j] = linked[j][i] = true;
    }
  }
  return rm;
}

namespace {

// Nearest roadmap nodes visible from p, tried in distance order.
std::vector<std::pair<std::size_t, double>> connect_point(
    const Roadmap& rm, const Workspace& ws, const Vec2& p, std::size_t max_candidates) {
  std::vector<std::pair<double, std::size_t>> by_dist;
  by_dist.reserve(rm.nodes.size());
  for (std::size_t i = 0; i < rm.nodes.size(); ++i)
    by_dist.emplace_back((p - rm.nodes[i]).norm_sq(), i);
  std::sort(by_dist.begin(), by_dist.end());

  std::vector<std::pair<std::size_t, double>> links;
  for (std::size_t t = 0; t < by_dist.size() && t < max_candidates; ++t) {
    const std::size_t i = by_dist[t].second;
    if (segment_clear(p, rm.nodes[i], ws))
      links.emplace_back(i, std::sqrt(by_dist[t].first));
  }
  return links;
}

std::string nearest_node_diagnostics(const Roadmap& rm, const Vec2& p) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < rm.nodes.size(); ++i) {
    const double d = (p - rm.nodes[i]).norm();
    if (d < best) {
      best = d;
      best_i = i;
    }
  }
  std::ostringstream ss;
  ss << "point (" << p.x << ", " << p.y << "); nearest node #" << best_i << " at ("
     << (rm.nodes.empty() ? 0.0 : rm.nodes[best_i].x) << ", "
     << (rm.nodes.empty() ? 0.0 : rm.nodes[best_i].y) << "), distance " << best;
  return ss.str();
}

}  // namespace

GeodesicResult geodesic_path(const Roadmap& rm, const Workspace& ws,
                             const Vec2& from, const Vec2& to) {
  GeodesicResult res;
  if (from == to) {
    res.length = 0.0;
    res.waypoints = {from};
    res.sub_goal = from;
    return res;
  }
  if (segment_clear(from, to, ws)) {
    res.length = distance(from, to);
    res.waypoints = {from, to};
    res.sub_goal = to;
    return res;
  }

  constexpr std::size_t kConnectCandidates = 10;
  const auto start_links = connect_point(rm, ws, from, kConnectCandidates);
  const auto goal_links = connect_point(rm, ws, to, kConnectCandidates);
  if (start_links.empty())
    throw std::runtime_error("geodesic_path: cannot connect start; " +
                             nearest_node_diagnostics(rm, from));
  if (goal_links.empty())
    throw std::runtime_error("geodesic_path: cannot connect goal; " +
                             nearest_node_diagnostics(rm, to));

  // Dijkstra from the virtual start over roadmap nodes.
  const std::size_t n = rm.nodes.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> prev(n, SIZE_MAX);
  using QItem = std::pair<double, std::size_t>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
  for (const auto& [i, d] : start_links) {
    if (d < dist[i]) {
      dist[i] = d;
      queue.push({d, i});
    }
  }
  std::vector<char> done(n, 0);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& [v, len] : rm.adjacency[u]) {
      if (dist[u] + len < dist[v]) {
        dist[v] = dist[u] + len;
        prev[v] = u;
        queue.push({dist[v], v});
      }
    }
  }

  double best_total = kInf;
  std::size_t best_exit = SIZE_MAX;
  double best_exit_len = 0.0;
  for (const auto& [i, d] : goal_links) {
    if (dist[i] + d < best_total) {
      best_total = dist[i] + d;
      best_exit = i;
      best_exit_len = d;
    }
  }
  if (best_exit == SIZE_MAX)
    throw std::runtime_error(
        "geodesic_path: endpoints connect but no graph path exists; start " +
        nearest_node_diagnostics(rm, from) + "; goal " + nearest_node_diagnostics(rm, to));
  (void)best_exit_len;

  std::vector<std::size_t> chain;
  for (std::size_t u = best_exit; u != SIZE_MAX; u = prev[u]) chain.push_back(u);
  std::reverse(chain.begin(), chain.end());

  res.waypoints.push_back(from);
  for (const std::size_t u : chain) res.waypoints.push_back(rm.nodes[u]);
  res.waypoints.push_back(to);
  res.length = best_total;
  res.sub_goal = res.waypoints[1];
  return res;
}

void dump_roadmap(const Roadmap& rm, const Workspace& ws, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.precision(17);
  save_workspace(ws, f);
  for (std::size_t i = 0; i < rm.nodes.size(); ++i)
    f << "node " << rm.nodes[i].x << ' ' << rm.nodes[i].y << ' '
      << (i < rm.n_uniform ? 'u' : 'm') << '\n';
  for (const auto& e : rm.edges)
    f << "edge " << e.i << ' ' << e.j << ' ' << e.length << '\n';
}

}  // namespace herd
