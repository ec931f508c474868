#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "routeplan/cost.hpp"
#include "routeplan/graph.hpp"
#include "routeplan/rng.hpp"
#include "routeplan/solver.hpp"

namespace routeplan {

/// A node-sequence individual with its cached evaluation.
struct Chromosome {
  Evaluation eval;

  const Route& route() const { return eval.route; }
  double cost() const { return eval.objective; }
};

using Population = std::vector<Chromosome>;

struct GAConfig {
  int population_size = 100;
  int max_generations = 250;
  int stall_generations = 50;
  double crossover_fraction = 0.8;
  double mutation_fraction = 0.3;
  double mix_probability = 0.5;
  int elite_count = 2;
  /// Fresh decodes tried per slot before an infeasible one is admitted.
  int init_retries = 50;
  std::uint64_t seed = 1;
};

void validate(const GAConfig& cfg);

Chromosome make_chromosome(Route route, const MissionGraph& g, const CostParams& p);

/// Decodes a fresh random priority vector, retrying up to cfg.init_retries
/// times for a feasible route; the last draw is returned regardless.
Chromosome random_chromosome(const MissionGraph& g, const GAConfig& cfg, const CostParams& p, Rng& rng);

/// Throws InitializationFailure if no chromosome is feasible.
Population init_population(const MissionGraph& g, const GAConfig& cfg, const CostParams& p, Rng& rng);

inline constexpr double kFitnessEpsilon = 1e-12;

/// Wheel slice of every chromosome, normalized to sum to one. Fitness is
/// 1 / (cost + eps), with costs shifted to be non-negative first.
std::vector<double> selection_probabilities(const Population& population);

/// k indices drawn with replacement, proportional to fitness.
std::vector<std::size_t> roulette_select(const Population& population, std::size_t k, Rng& rng);

/// Swaps interior genes at aligned positions where swap_mask is set;
/// mask entry i refers to interior position i+1. Offspring failing
/// validation are dropped, so 0..2 chromosomes come back.
std::vector<Chromosome> crossover_with_mask(const Chromosome& a, const Chromosome& b, const std::vector<bool>& swap_mask,
                                            const MissionGraph& g, const CostParams& p);

std::vector<Chromosome> uniform_crossover(const Chromosome& a, const Chromosome& b, double mix_probability,
                                          Rng& rng, const MissionGraph& g, const CostParams& p);

enum class MutationKind { inversion, insertion, swap };

/// Reverses genes [i, j] (inclusive).
Route invert_segment(Route r, std::size_t i, std::size_t j);
/// Moves the gene at `from` so that it ends up at index `to`.
Route move_gene(Route r, std::size_t from, std::size_t to);
Route swap_genes(Route r, std::size_t i, std::size_t j);

/// One random inversion, insertion or swap restricted to interior genes.
/// An infeasible mutant is discarded and the parent returned.
Chromosome mutate(const Chromosome& c, Rng& rng, const MissionGraph& g, const CostParams& p);

/// Elitist generational GA. Dropped offspring and offspring duplicating a
/// route already in the next generation are replaced by fresh random decodes.
/// Stops after max_generations or when the best cost has not improved for
/// stall_generations.
SolveResult evolve(const MissionGraph& g, const GAConfig& cfg, const CostParams& p);

}  // namespace routeplan
