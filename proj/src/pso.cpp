#include "routeplan/pso.hpp"

#include <string>

#include "routeplan/error.hpp"

namespace routeplan {

void validate(const SwarmConfig& cfg) {
  if (cfg.swarm_size < 1) throw InvalidParameter("pso.swarm_size must be at least 1");
  if (cfg.max_iterations < 0) throw InvalidParameter("pso.max_iterations must be non-negative");
  if (cfg.omega < 0.0 || cfg.c1 < 0.0 || cfg.c2 < 0.0)
    throw InvalidParameter("pso.omega, pso.c1 and pso.c2 must be non-negative");
  if (!(cfg.v_max > 0.0)) throw InvalidParameter("pso.v_max must be positive");
  if (!(cfg.position_min < cfg.position_max)) throw InvalidParameter("pso position bounds are degenerate");
  if (cfg.init_velocity < 0.0) throw InvalidParameter("pso.init_velocity must be non-negative");
}

Eigen::VectorXd update_velocity(const Particle& particle, const PriorityVector& gbest, const SwarmConfig& cfg,
                                Rng& rng) {
  const auto n = particle.velocity.size();
  if (cfg.per_component_random) {
    Eigen::VectorXd r1(n), r2(n);
    for (Eigen::Index i = 0; i < n; ++i) r1[i] = rng.uniform();
    for (Eigen::Index i = 0; i < n; ++i) r2[i] = rng.uniform();
    return velocity_update(particle.velocity, particle.position, particle.pbest_position, gbest, r1, r2, cfg);
  }
  const double r1 = rng.uniform();
  const double r2 = rng.uniform();
  return velocity_update(particle.velocity, particle.position, particle.pbest_position, gbest, r1, r2, cfg);
}

PriorityVector update_position(const Particle& particle, const SwarmConfig& cfg) {
  return position_update(particle.position, particle.velocity, cfg);
}

Evaluation evaluate_position(const PriorityVector& position, const MissionGraph& g, const CostParams& p) {
  return evaluate(decode(position, g), g, p);
}

namespace {

void refresh_best(SwarmState& state) {
  for (const auto& particle : state.particles) {
    if (particle.pbest_cost < state.gbest_cost) {
      state.gbest_cost = particle.pbest_cost;
      state.gbest_position = particle.pbest_position;
    }
  }
}

HistoryRecord summarize(const SwarmState& state) {
  double sum = 0.0;
  for (const auto& particle : state.particles) sum += particle.current_cost;
  return {state.iteration, state.gbest_cost, sum / static_cast<double>(state.particles.size())};
}

}  // namespace

SwarmState init_swarm(const MissionGraph& g, const SwarmConfig& cfg, const CostParams& p, Rng& rng) {
  validate(cfg);
  const auto n = static_cast<Eigen::Index>(g.node_count());
  SwarmState state;
  state.particles.reserve(static_cast<std::size_t>(cfg.swarm_size));
  for (int k = 0; k < cfg.swarm_size; ++k) {
    Particle particle;
    particle.position = random_priority_vector(g.node_count(), rng);
    particle.velocity.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) particle.velocity[i] = rng.uniform(-cfg.init_velocity, cfg.init_velocity);
    particle.velocity = particle.velocity.cwiseMax(-cfg.v_max).cwiseMin(cfg.v_max);
    particle.current_cost = evaluate_position(particle.position, g, p).objective;
    particle.pbest_position = particle.position;
    particle.pbest_cost = particle.current_cost;
    state.particles.push_back(std::move(particle));
  }
  state.gbest_position = state.particles.front().pbest_position;
  state.gbest_cost = state.particles.front().pbest_cost;
  refresh_best(state);
  return state;
}

void step_swarm(SwarmState& state, const MissionGraph& g, const SwarmConfig& cfg, const CostParams& p, Rng& rng) {
  const PriorityVector gbest = state.gbest_position;
  for (auto& particle : state.particles) {
    particle.velocity = update_velocity(particle, gbest, cfg, rng);
    particle.position = update_position(particle, cfg);
    particle.current_cost = evaluate_position(particle.position, g, p).objective;
    if (particle.current_cost < particle.pbest_cost) {
      particle.pbest_cost = particle.current_cost;
      particle.pbest_position = particle.position;
    }
  }
  refresh_best(state);
  ++state.iteration;
}

SolveResult run_pso(const MissionGraph& g, const SwarmConfig& cfg, const CostParams& p) {
  validate(cfg);
  validate(p);
  Rng rng(cfg.seed);
  SwarmState state = init_swarm(g, cfg, p, rng);

  SolveResult result;
  result.history.push_back(summarize(state));
  for (int it = 0; it < cfg.max_iterations; ++it) {
    step_swarm(state, g, cfg, p, rng);
    result.history.push_back(summarize(state));
  }
  result.best = evaluate_position(state.gbest_position, g, p);
  return result;
}

}  // namespace routeplan
