#include "routeplan/ga.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "routeplan/error.hpp"
#include "routeplan/route.hpp"

namespace routeplan {

void validate(const GAConfig& cfg) {
  auto fraction = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (cfg.population_size < 2) throw InvalidParameter("ga.population_size must be at least 2");
  if (cfg.max_generations < 0) throw InvalidParameter("ga.max_generations must be non-negative");
  if (cfg.stall_generations < 1) throw InvalidParameter("ga.stall_generations must be positive");
  if (!fraction(cfg.crossover_fraction)) throw InvalidParameter("ga.crossover_fraction must be in [0, 1]");
  if (!fraction(cfg.mutation_fraction)) throw InvalidParameter("ga.mutation_fraction must be in [0, 1]");
  if (!fraction(cfg.mix_probability)) throw InvalidParameter("ga.mix_probability must be in [0, 1]");
  if (cfg.elite_count < 0 || cfg.elite_count >= cfg.population_size)
    throw InvalidParameter("ga.elite_count must be in [0, population_size)");
  if (cfg.init_retries < 1) throw InvalidParameter("ga.init_retries must be positive");
}

Chromosome make_chromosome(Route route, const MissionGraph& g, const CostParams& p) {
  return Chromosome{evaluate(std::move(route), g, p)};
}

Chromosome random_chromosome(const MissionGraph& g, const GAConfig& cfg, const CostParams& p, Rng& rng) {
  Chromosome c;
  for (int attempt = 0; attempt < cfg.init_retries; ++attempt) {
    c = make_chromosome(decode(random_priority_vector(g.node_count(), rng), g), g, p);
    if (c.eval.feasible()) break;
  }
  return c;
}

Population init_population(const MissionGraph& g, const GAConfig& cfg, const CostParams& p, Rng& rng) {
  validate(cfg);
  Population pop;
  pop.reserve(static_cast<std::size_t>(cfg.population_size));
  for (int i = 0; i < cfg.population_size; ++i) pop.push_back(random_chromosome(g, cfg, p, rng));
  if (std::none_of(pop.begin(), pop.end(), [](const Chromosome& c) { return c.eval.feasible(); }))
    throw InitializationFailure("no feasible route found while initializing the population");
  return pop;
}

std::vector<double> selection_probabilities(const Population& population) {
  std::vector<double> fitness(population.size());
  if (population.empty()) return fitness;
  double lowest = 0.0;
  for (const auto& c : population) lowest = std::min(lowest, c.cost());
  for (std::size_t i = 0; i < population.size(); ++i)
    fitness[i] = 1.0 / (population[i].cost() - lowest + kFitnessEpsilon);
  const double total = std::accumulate(fitness.begin(), fitness.end(), 0.0);
  for (auto& f : fitness) f /= total;
  return fitness;
}

std::vector<std::size_t> roulette_select(const Population& population, std::size_t k, Rng& rng) {
  std::vector<std::size_t> picks;
  if (population.empty()) return picks;
  const auto probs = selection_probabilities(population);
  std::vector<double> cumulative(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
  picks.reserve(k);
  for (std::size_t n = 0; n < k; ++n) {
    const double spin = rng.uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), spin);
    picks.push_back(std::min(static_cast<std::size_t>(it - cumulative.begin()), population.size() - 1));
  }
  return picks;
}

std::vector<Chromosome> crossover_with_mask(const Chromosome& a, const Chromosome& b, const std::vector<bool>& swap_mask,
                                            const MissionGraph& g, const CostParams& p) {
  Route left = a.route();
  Route right = b.route();
  const std::size_t shared = std::min(left.size(), right.size()) < 2
                                 ? 0
                                 : std::min(left.size(), right.size()) - 2;
  bool changed = false;
  for (std::size_t k = 0; k < shared && k < swap_mask.size(); ++k) {
    if (!swap_mask[k]) continue;
    auto& x = left.nodes[k + 1];
    auto& y = right.nodes[k + 1];
    if (x != y) {
      std::swap(x, y);
      changed = true;
    }
  }

  std::vector<Chromosome> kids;
  if (!changed) {
    kids = {a, b};
  } else {
    kids.push_back(make_chromosome(std::move(left), g, p));
    kids.push_back(make_chromosome(std::move(right), g, p));
  }
  std::erase_if(kids, [](const Chromosome& c) { return !c.eval.feasible(); });
  return kids;
}

std::vector<Chromosome> uniform_crossover(const Chromosome& a, const Chromosome& b, double mix_probability,
                                          Rng& rng, const MissionGraph& g, const CostParams& p) {
  const std::size_t shortest = std::min(a.route().size(), b.route().size());
  const std::size_t shared = shortest < 2 ? 0 : shortest - 2;
  std::vector<bool> mask(shared);
  for (std::size_t k = 0; k < shared; ++k) mask[k] = rng.bernoulli(mix_probability);
  return crossover_with_mask(a, b, mask, g, p);
}

Route invert_segment(Route r, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  std::reverse(r.nodes.begin() + static_cast<std::ptrdiff_t>(i), r.nodes.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return r;
}

Route move_gene(Route r, std::size_t from, std::size_t to) {
  const NodeId gene = r.nodes[from];
  r.nodes.erase(r.nodes.begin() + static_cast<std::ptrdiff_t>(from));
  r.nodes.insert(r.nodes.begin() + static_cast<std::ptrdiff_t>(to), gene);
  return r;
}

Route swap_genes(Route r, std::size_t i, std::size_t j) {
  std::swap(r.nodes[i], r.nodes[j]);
  return r;
}

Chromosome mutate(const Chromosome& c, Rng& rng, const MissionGraph& g, const CostParams& p) {
  const auto kind = static_cast<MutationKind>(rng.index(3));
  const std::size_t len = c.route().size();
  if (len < 4) return c;  // fewer than two interior genes: every operator is a no-op

  const std::size_t interior = len - 2;
  std::size_t i = 1 + rng.index(interior);
  std::size_t j = 1 + rng.index(interior - 1);
  if (j >= i) ++j;

  Route mutant;
  switch (kind) {
    case MutationKind::inversion: mutant = invert_segment(c.route(), i, j); break;
    case MutationKind::insertion: mutant = move_gene(c.route(), i, j); break;
    case MutationKind::swap: mutant = swap_genes(c.route(), i, j); break;
  }
  auto candidate = make_chromosome(std::move(mutant), g, p);
  return candidate.eval.feasible() ? candidate : c;
}

namespace {

void sort_by_cost(Population& pop) {
  std::stable_sort(pop.begin(), pop.end(),
                   [](const Chromosome& l, const Chromosome& r) { return l.cost() < r.cost(); });
}

HistoryRecord summarize(const Population& pop, int generation) {
  double sum = 0.0;
  for (const auto& c : pop) sum += c.cost();
  return {generation, pop.front().cost(), sum / static_cast<double>(pop.size())};
}

}  // namespace

SolveResult evolve(const MissionGraph& g, const GAConfig& cfg, const CostParams& p) {
  validate(cfg);
  validate(p);
  Rng rng(cfg.seed);
  const auto size = static_cast<std::size_t>(cfg.population_size);

  Population pop = init_population(g, cfg, p, rng);
  sort_by_cost(pop);

  SolveResult result;
  result.history.push_back(summarize(pop, 0));
  result.best = pop.front().eval;
  int stall = 0;

  for (int gen = 1; gen <= cfg.max_generations; ++gen) {
    Population next(pop.begin(), pop.begin() + cfg.elite_count);
    next.reserve(size);

    while (next.size() < size) {
      const auto parents = roulette_select(pop, 2, rng);
      const auto& a = pop[parents[0]];
      const auto& b = pop[parents[1]];

      std::vector<Chromosome> kids;
      if (rng.bernoulli(cfg.crossover_fraction))
        kids = uniform_crossover(a, b, cfg.mix_probability, rng, g, p);
      else
        kids = {a, b};
      std::size_t discarded = 2 - kids.size();

      for (auto& kid : kids) {
        if (rng.bernoulli(cfg.mutation_fraction)) kid = mutate(kid, rng, g, p);
        // Clones count as discarded offspring and are replaced by fresh decodes.
        const bool clone = std::any_of(next.begin(), next.end(),
                                       [&](const Chromosome& c) { return c.route() == kid.route(); });
        if (clone) {
          ++discarded;
          continue;
        }
        if (next.size() < size) next.push_back(std::move(kid));
      }
      for (std::size_t d = 0; d < discarded && next.size() < size; ++d)
        next.push_back(random_chromosome(g, cfg, p, rng));
    }

    pop = std::move(next);
    sort_by_cost(pop);
    result.history.push_back(summarize(pop, gen));

    if (pop.front().cost() < result.best.objective) {
      result.best = pop.front().eval;
      stall = 0;
    } else if (++stall >= cfg.stall_generations) {
      break;
    }
  }
  return result;
}

}  // namespace routeplan
