#pragma once

#include <vector>

#include "herd/vec2.hpp"
#include "herd/workspace.hpp"

namespace herd {

struct AgentState {
  Vec2 position;
  Vec2 velocity;
  Vec2 acceleration;
};

// Weighted-sum coefficients and perception limits for one species.
struct BehaviorParams {
  double w_separation = 1.0;
  double w_cohesion = 5.0;
  double w_alignment = 3.0;
  double w_fear = 15.0;
  double w_obstacle = 5.0;
  double w_damping = 1.0;
  double view_range = 25.0;       // pixels
  double field_of_view = 2.0 * M_PI;  // radians; 2*pi = omnidirectional
  double max_speed = 2.0;         // pixels per step
};

// Raw (unit-scale) forces before weighting. The weighted combination is
// combined_acceleration(); keeping the weights out of the breakdown keeps
// acceleration exactly linear in the coefficient vector.
struct ForceBreakdown {
  Vec2 separation;
  Vec2 cohesion;
  Vec2 alignment;
  Vec2 fear;
  Vec2 obstacle_avoidance;
  Vec2 damping;  // -velocity
};

// Indices of flock members within view_range and field of view of agent
// `agent_index`. A stationary agent sees the full circle.
std::vector<std::size_t> neighbors_of(std::size_t agent_index,
                                      const std::vector<AgentState>& flock,
                                      const BehaviorParams& params);

ForceBreakdown compute_forces(std::size_t agent_index,
                              const std::vector<AgentState>& flock,
                              const AgentState& shepherd,
                              const Workspace& workspace,
                              const BehaviorParams& params);

// acceleration = sum_i w_i * force_i
Vec2 combined_acceleration(const ForceBreakdown& f, const BehaviorParams& params);

// One semi-implicit Euler step for the whole flock: forces are evaluated on
// the input state, then velocity (speed-clipped) and position are updated.
// Positions are kept outside obstacles and inside bounds by sliding along
// the blocking boundary. Throws std::invalid_argument if an agent starts
// inside an obstacle.
std::vector<AgentState> step_flock(const std::vector<AgentState>& flock,
                                   const AgentState& shepherd,
                                   const Workspace& workspace,
                                   const BehaviorParams& params,
                                   double dt = 1.0);

// Shared collision resolution: advances `agent` by its velocity (already
// clipped) for dt, sliding along obstacle edges and world bounds.
void move_with_collisions(AgentState& agent, const Workspace& workspace, double dt);

Vec2 flock_centroid(const std::vector<AgentState>& flock);

// Largest distance from any member to the centroid.
double flock_radius(const std::vector<AgentState>& flock);

}  // namespace herd
