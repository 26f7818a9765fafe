#include "herd/flock.hpp"

#include <cmath>
#include <stdexcept>

namespace herd {

namespace {

// Perception test shared by flock neighbors and the fear trigger.
bool perceives(const AgentState& self, const Vec2& other_pos,
               const BehaviorParams& params) {
  const Vec2 offset = other_pos - self.position;
  const double d = offset.norm();
  if (d > params.view_range || d == 0.0) return false;
  if (self.velocity.norm_sq() == 0.0) return true;  // stationary: full circle
  const double cos_half_fov = std::cos(params.field_of_view * 0.5);
  const double cos_bearing = self.velocity.dot(offset) / (self.velocity.norm() * d);
  return cos_bearing >= cos_half_fov;
}

}  // namespace

std::vector<std::size_t> neighbors_of(std::size_t agent_index,
                                      const std::vector<AgentState>& flock,
                                      const BehaviorParams& params) {
  const AgentState& self = flock.at(agent_index);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < flock.size(); ++j) {
    if (j == agent_index) continue;
    if (perceives(self, flock[j].position, params)) out.push_back(j);
  }
  return out;
}

ForceBreakdown compute_forces(std::size_t agent_index,
                              const std::vector<AgentState>& flock,
                              const AgentState& shepherd,
                              const Workspace& workspace,
                              const BehaviorParams& params) {
  const AgentState& self = flock.at(agent_index);
  ForceBreakdown f;

  const auto neighbors = neighbors_of(agent_index, flock, params);
  if (!neighbors.empty()) {
    Vec2 centroid;
    Vec2 mean_velocity;
    for (const std::size_t j : neighbors) {
      const Vec2 away = self.position - flock[j].position;
      f.separation += away / away.norm_sq();  // inverse-distance falloff
      centroid += flock[j].position;
      mean_velocity += flock[j].velocity;
    }
    const double n = static_cast<double>(neighbors.size());
    centroid *= 1.0 / n;
    mean_velocity *= 1.0 / n;
    f.cohesion = (centroid - self.position).normalized();
    f.alignment = (mean_velocity - self.velocity).normalized();
  }

  if (perceives(self, shepherd.position, params)) {
    f.fear = (self.position - shepherd.position).normalized();
  }

  for (const auto& poly : workspace.obstacles) {
    const Vec2 q = closest_point_on_polygon(self.position, poly);
    const double d = (self.position - q).norm();
    if (d < params.view_range && d > 0.0) {
      // Linear ramp: full push at contact, zero at view_range.
      f.obstacle_avoidance +=
          (self.position - q).normalized() * ((params.view_range - d) / params.view_range);
    }
  }

  f.damping = -self.velocity;
  return f;
}

Vec2 combined_acceleration(const ForceBreakdown& f, const BehaviorParams& p) {
  return f.separation * p.w_separation + f.cohesion * p.w_cohesion +
         f.alignment * p.w_alignment + f.fear * p.w_fear +
         f.obstacle_avoidance * p.w_obstacle + f.damping * p.w_damping;
}

void move_with_collisions(AgentState& agent, const Workspace& ws, double dt) {
  Vec2 next = agent.position + agent.velocity * dt;

  // Slide along obstacle edges: push the point out along the boundary normal
  // and keep only the tangential velocity component. Two passes cover the
  // corner case of being pushed into a neighboring polygon.
  constexpr double kPushOut = 1e-3;
  for (int pass = 0; pass < 2; ++pass) {
    bool hit = false;
    for (const auto& poly : ws.obstacles) {
      if (!point_in_polygon(next, poly)) continue;
      const Vec2 q = closest_point_on_polygon(next, poly);
      // Interior point: the outward direction runs from the point through
      // the nearest boundary point.
      Vec2 normal = (q - next).normalized();
      if (normal.norm_sq() == 0.0) normal = (agent.position - next).normalized();
      next = q + normal * kPushOut;
      agent.velocity -= normal * agent.velocity.dot(normal);
      hit = true;
    }
    if (!hit) break;
  }
  // Residual penetration (e.g. overlapping polygons): stay put.
  for (const auto& poly : ws.obstacles) {
    if (point_in_polygon(next, poly)) {
      next = agent.position;
      agent.velocity = {0.0, 0.0};
      break;
    }
  }

  // World bounds: clamp position, kill the normal velocity component.
  const Rect& b = ws.bounds;
  if (next.x < b.min_x) { next.x = b.min_x; agent.velocity.x = 0.0; }
  if (next.x > b.max_x) { next.x = b.max_x; agent.velocity.x = 0.0; }
  if (next.y < b.min_y) { next.y = b.min_y; agent.velocity.y = 0.0; }
  if (next.y > b.max_y) { next.y = b.max_y; agent.velocity.y = 0.0; }

  agent.position = next;
}

std::vector<AgentState> step_flock(const std::vector<AgentState>& flock,
                                   const AgentState& shepherd,
                                   const Workspace& workspace,
                                   const BehaviorParams& params,
                                   double dt) {
  if (dt <= 0.0) throw std::invalid_argument("step_flock: dt must be positive");
  for (const auto& agent : flock) {
    if (workspace.inside_obstacle(agent.position))
      throw std::invalid_argument("step_flock: agent starts inside an obstacle");
  }

  // Forces for all agents are computed on the input state so the update is
  // simultaneous.
  std::vector<ForceBreakdown> forces(flock.size());
  for (std::size_t i = 0; i < flock.size(); ++i)
    forces[i] = compute_forces(i, flock, shepherd, workspace, params);

  std::vector<AgentState> out = flock;
  for (std::size_t i = 0; i < out.size(); ++i) {
    AgentState& a = out[i];
    a.acceleration = combined_acceleration(forces[i], params);
    a.velocity = clamp_norm(a.velocity + a.acceleration * dt, params.max_speed);
    move_with_collisions(a, workspace, dt);
  }
  return out;
}

Vec2 flock_centroid(const std::vector<AgentState>& flock) {
  Vec2 c;
  for (const auto& a : flock) c += a.position;
  return flock.empty() ? c : c / static_cast<double>(flock.size());
}

double flock_radius(const std::vector<AgentState>& flock) {
  const Vec2 c = flock_centroid(flock);
  double r = 0.0;
  for (const auto& a : flock) r = std::max(r, distance(a.position, c));
  return r;
}

}  // namespace herd
