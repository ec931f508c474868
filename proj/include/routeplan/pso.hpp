#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "routeplan/cost.hpp"
#include "routeplan/graph.hpp"
#include "routeplan/rng.hpp"
#include "routeplan/route.hpp"
#include "routeplan/solver.hpp"

namespace routeplan {

struct SwarmConfig {
  int swarm_size = 100;
  int max_iterations = 250;
  double omega = 0.9;
  double c1 = 1.494;
  double c2 = 1.494;
  double v_max = 50.0;
  double position_min = kPriorityMin;
  double position_max = kPriorityMax;
  /// Initial velocities are uniform in [-init_velocity, init_velocity].
  double init_velocity = 20.0;
  /// Draw r1, r2 per component instead of once per particle update.
  bool per_component_random = true;
  std::uint64_t seed = 1;
};

void validate(const SwarmConfig& cfg);

struct Particle {
  PriorityVector position;
  Eigen::VectorXd velocity;
  PriorityVector pbest_position;
  double pbest_cost = 0.0;
  double current_cost = 0.0;
};

struct SwarmState {
  std::vector<Particle> particles;
  PriorityVector gbest_position;
  double gbest_cost = 0.0;
  int iteration = 0;
};

/// omega * v + c1 * r1 .* (pbest - x) + c2 * r2 .* (gbest - x), clamped to
/// [-v_max, v_max]. r1 and r2 are per-component weights (pass constant
/// vectors for the scalar form).
template <typename V, typename X, typename P, typename G, typename R1, typename R2>
Eigen::VectorXd velocity_update(const Eigen::MatrixBase<V>& velocity, const Eigen::MatrixBase<X>& position,
                                const Eigen::MatrixBase<P>& pbest, const Eigen::MatrixBase<G>& gbest,
                                const Eigen::MatrixBase<R1>& r1, const Eigen::MatrixBase<R2>& r2,
                                const SwarmConfig& cfg) {
  Eigen::VectorXd next = cfg.omega * velocity + cfg.c1 * r1.cwiseProduct(pbest - position) +
                         cfg.c2 * r2.cwiseProduct(gbest - position);
  return next.cwiseMax(-cfg.v_max).cwiseMin(cfg.v_max);
}

template <typename V, typename X, typename P, typename G>
Eigen::VectorXd velocity_update(const Eigen::MatrixBase<V>& velocity, const Eigen::MatrixBase<X>& position,
                                const Eigen::MatrixBase<P>& pbest, const Eigen::MatrixBase<G>& gbest, double r1,
                                double r2, const SwarmConfig& cfg) {
  const auto n = velocity.size();
  return velocity_update(velocity, position, pbest, gbest, Eigen::VectorXd::Constant(n, r1),
                         Eigen::VectorXd::Constant(n, r2), cfg);
}

/// x + v clamped to [position_min, position_max].
template <typename X, typename V>
PriorityVector position_update(const Eigen::MatrixBase<X>& position, const Eigen::MatrixBase<V>& velocity,
                               const SwarmConfig& cfg) {
  return (position + velocity).cwiseMax(cfg.position_min).cwiseMin(cfg.position_max);
}

/// Draws r1, r2 from rng according to cfg.per_component_random.
Eigen::VectorXd update_velocity(const Particle& particle, const PriorityVector& gbest, const SwarmConfig& cfg,
                                Rng& rng);

PriorityVector update_position(const Particle& particle, const SwarmConfig& cfg);

/// Decode + evaluate; infeasible routes cost the penalty.
Evaluation evaluate_position(const PriorityVector& position, const MissionGraph& g, const CostParams& p);

SwarmState init_swarm(const MissionGraph& g, const SwarmConfig& cfg, const CostParams& p, Rng& rng);

/// One synchronous iteration: every particle moves against the gbest of the
/// previous iteration, then pbest and gbest are refreshed.
void step_swarm(SwarmState& state, const MissionGraph& g, const SwarmConfig& cfg, const CostParams& p, Rng& rng);

SolveResult run_pso(const MissionGraph& g, const SwarmConfig& cfg, const CostParams& p);

}  // namespace routeplan
