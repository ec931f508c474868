#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "routeplan/error.hpp"
#include "routeplan/ga.hpp"
#include "routeplan/oracle.hpp"

using namespace routeplan;
using namespace routeplan::testing;

namespace {

bool all_hops_are_edges(const Route& r, const MissionGraph& g) {
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (!g.has_edge(r.nodes[i], r.nodes[i + 1])) return false;
  return true;
}

Chromosome with_cost(NodeId tag, double cost) {
  Chromosome c;
  c.eval.route.nodes = {1, tag};
  c.eval.objective = cost;
  return c;
}

// Decoding fixture plus the 5-8 and 14-18 edges, so that the forced swap
// below yields two valid children.
MissionGraph example_graph_with_shortcuts() {
  const auto base = decoding_example_graph();
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  edges.push_back({5, 8, task(4, 2, 30)});
  edges.push_back({14, 18, task(4, 2, 30)});
  return MissionGraph(std::vector<Waypoint>(base.waypoints().begin(), base.waypoints().end()), edges, 1, 18);
}

}  // namespace

TEST(InitPopulation, TwoNodeGraphOnlyHasOneRoute) {
  const auto g = two_node_graph();
  GAConfig cfg;
  cfg.population_size = 10;
  Rng rng(1);
  for (const auto& c : init_population(g, cfg, CostParams{}, rng))
    EXPECT_EQ(c.route().nodes, (std::vector<NodeId>{1, 2}));
}

TEST(InitPopulation, SameSeedSamePopulation) {
  const auto g = generate_scenario(ScenarioConfig{});
  GAConfig cfg;
  Rng a(7), b(7);
  const auto pa = init_population(g, cfg, CostParams{}, a);
  const auto pb = init_population(g, cfg, CostParams{}, b);
  ASSERT_EQ(pa.size(), pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(pa[i].route(), pb[i].route());
}

TEST(InitPopulation, TwentyNodeScenario) {
  const auto g = generate_scenario(ScenarioConfig{});
  GAConfig cfg;
  cfg.population_size = 50;
  Rng rng(3);
  const auto pop = init_population(g, cfg, CostParams{}, rng);
  ASSERT_EQ(pop.size(), 50u);
  for (const auto& c : pop) {
    const bool flagged = !c.eval.report.violations.empty();
    EXPECT_NE(c.eval.feasible(), flagged);
    EXPECT_EQ(c.route().front(), g.start());
    EXPECT_EQ(c.route().back(), g.destination());
  }
}

TEST(InitPopulation, NoFeasibleRouteThrows) {
  const auto g = two_node_graph();
  CostParams p;
  p.t_available = 1.0;
  GAConfig cfg;
  cfg.init_retries = 2;
  Rng rng(1);
  EXPECT_THROW(init_population(g, cfg, p, rng), InitializationFailure);
}

TEST(Roulette, UniformCostsGiveUniformProbabilities) {
  Population pop;
  for (int i = 0; i < 8; ++i) pop.push_back(with_cost(i + 2, 0.3));
  for (double q : selection_probabilities(pop)) EXPECT_NEAR(q, 1.0 / 8.0, 1e-15);
}

TEST(Roulette, PenalizedChromosomeIsRarelyPicked) {
  Population pop;
  for (int i = 0; i < 9; ++i) pop.push_back(with_cost(i + 2, 0.2 + 0.01 * i));
  pop.push_back(with_cost(99, 1e6));
  const auto q = selection_probabilities(pop);
  Rng rng(11);
  const auto picks = roulette_select(pop, 10000, rng);
  std::map<std::size_t, int> counts;
  for (auto i : picks) ++counts[i];
  EXPECT_LT(counts[9], 100);
  // Empirical frequencies agree with the computed wheel within 4 sigma.
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double sigma = std::sqrt(q[i] * (1 - q[i]) / 10000.0);
    EXPECT_NEAR(counts[i] / 10000.0, q[i], 4 * sigma + 1e-9);
  }
}

TEST(Roulette, SingleChromosomeAlwaysSelected) {
  Population pop{with_cost(2, 0.7)};
  Rng rng(2);
  for (auto i : roulette_select(pop, 100, rng)) EXPECT_EQ(i, 0u);
}

TEST(Roulette, NegativeCostsStillSelectable) {
  Population pop{with_cost(2, -0.5), with_cost(3, 0.1), with_cost(4, 0.4)};
  const auto q = selection_probabilities(pop);
  EXPECT_NEAR(q[0] + q[1] + q[2], 1.0, 1e-12);
  EXPECT_GT(q[0], q[1]);
  EXPECT_GT(q[1], q[2]);
}

TEST(Crossover, IdenticalParentsReproduceThemselves) {
  const auto g = decoding_example_graph();
  const auto c = make_chromosome(Route{{1, 3, 8, 13, 18}}, g, CostParams{});
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto kids = uniform_crossover(c, c, 0.5, rng, g, CostParams{});
    ASSERT_EQ(kids.size(), 2u);
    EXPECT_EQ(kids[0].route(), c.route());
    EXPECT_EQ(kids[1].route(), c.route());
  }
}

TEST(Crossover, ZeroMixReturnsParents) {
  const auto g = complete_graph(7);
  const auto a = make_chromosome(Route{{1, 2, 3, 7}}, g, CostParams{});
  const auto b = make_chromosome(Route{{1, 4, 5, 6, 7}}, g, CostParams{});
  Rng rng(4);
  const auto kids = uniform_crossover(a, b, 0.0, rng, g, CostParams{});
  ASSERT_EQ(kids.size(), 2u);
  EXPECT_EQ(kids[0].route(), a.route());
  EXPECT_EQ(kids[1].route(), b.route());
}

TEST(Crossover, ForcedSwapKeptOnlyWhenHopsExist) {
  const CostParams p;
  for (const auto& g : {decoding_example_graph(), example_graph_with_shortcuts()}) {
    const auto a = make_chromosome(Route{{1, 3, 8, 13, 18}}, g, p);
    const auto b = make_chromosome(Route{{1, 5, 8, 14, 18}}, g, p);
    const Route left{{1, 5, 8, 13, 18}};
    const Route right{{1, 3, 8, 14, 18}};
    const auto kids = crossover_with_mask(a, b, {true, false, false}, g, p);
    std::vector<Route> expected;
    for (const auto& r : {left, right})
      if (all_hops_are_edges(r, g)) expected.push_back(r);
    std::vector<Route> got;
    for (const auto& k : kids) got.push_back(k.route());
    EXPECT_EQ(got, expected);
  }
  EXPECT_EQ(crossover_with_mask(make_chromosome(Route{{1, 3, 8, 13, 18}}, example_graph_with_shortcuts(), p),
                                make_chromosome(Route{{1, 5, 8, 14, 18}}, example_graph_with_shortcuts(), p),
                                {true, false, false}, example_graph_with_shortcuts(), p)
                .size(),
            2u);
}

TEST(Mutation, OperatorsOnInterior) {
  const Route r{{1, 3, 8, 13, 18}};
  EXPECT_EQ(invert_segment(r, 1, 3).nodes, (std::vector<NodeId>{1, 13, 8, 3, 18}));
  EXPECT_EQ(swap_genes(r, 1, 3).nodes, (std::vector<NodeId>{1, 13, 8, 3, 18}));
  EXPECT_EQ(move_gene(r, 1, 3).nodes, (std::vector<NodeId>{1, 8, 13, 3, 18}));
  EXPECT_EQ(move_gene(r, 3, 1).nodes, (std::vector<NodeId>{1, 13, 3, 8, 18}));
}

TEST(Mutation, InvertedFixtureRouteIsRejected) {
  // 1-13 is not an edge of the fixture, so the inversion cannot survive.
  const auto g = decoding_example_graph();
  const auto candidate = invert_segment(Route{{1, 3, 8, 13, 18}}, 1, 3);
  EXPECT_FALSE(all_hops_are_edges(candidate, g));
  const auto parent = make_chromosome(Route{{1, 3, 8, 13, 18}}, g, CostParams{});
  Rng rng(8);
  for (int i = 0; i < 200; ++i) EXPECT_NE(mutate(parent, rng, g, CostParams{}).route(), candidate);
}

TEST(Mutation, SingleInteriorGeneUnchanged) {
  const auto g = complete_graph(4);
  const auto c = make_chromosome(Route{{1, 2, 4}}, g, CostParams{});
  Rng rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(mutate(c, rng, g, CostParams{}).route(), c.route());
}

TEST(Mutation, EndpointsNeverMove) {
  const auto g = complete_graph(9);
  auto c = make_chromosome(Route{{1, 2, 3, 4, 5, 6, 7, 8, 9}}, g, CostParams{});
  Rng rng(12);
  for (int i = 0; i < 10000; ++i) {
    c = mutate(c, rng, g, CostParams{});
    ASSERT_EQ(c.route().front(), 1);
    ASSERT_EQ(c.route().back(), 9);
    ASSERT_EQ(c.route().size(), 9u);
  }
}

TEST(Evolve, ZeroGenerationsReturnsBestInitial) {
  const auto g = generate_scenario(ScenarioConfig{});
  GAConfig cfg;
  cfg.max_generations = 0;
  cfg.population_size = 30;
  const CostParams p;
  const auto result = evolve(g, cfg, p);
  ASSERT_EQ(result.history.size(), 1u);
  Rng rng(cfg.seed);
  const auto pop = init_population(g, cfg, p, rng);
  double best = pop.front().cost();
  for (const auto& c : pop) best = std::min(best, c.cost());
  EXPECT_EQ(result.best.objective, best);
  EXPECT_EQ(result.history[0].best_cost, best);
}

TEST(Evolve, FiveNodeFixtureMatchesOracle) {
  const auto g = five_node_graph();
  const CostParams p;
  const auto oracle = optimal_route_bruteforce(g, p);
  ASSERT_TRUE(oracle.has_solution());
  GAConfig cfg;
  cfg.max_generations = 200;
  const auto result = evolve(g, cfg, p);
  EXPECT_LE(result.best.objective, oracle.best->objective * 1.01);
}

TEST(Evolve, Deterministic) {
  ScenarioConfig sc;
  sc.seed = 21;
  const auto g = generate_scenario(sc);
  GAConfig cfg;
  cfg.max_generations = 40;
  cfg.seed = 99;
  const auto a = evolve(g, cfg, CostParams{});
  const auto b = evolve(g, cfg, CostParams{});
  EXPECT_EQ(a.best.route, b.best.route);
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    EXPECT_EQ(a.history[i].best_cost, b.history[i].best_cost);
    EXPECT_EQ(a.history[i].mean_cost, b.history[i].mean_cost);
  }
}

TEST(Evolve, StallStopsEarly) {
  const auto g = two_node_graph();
  GAConfig cfg;
  cfg.max_generations = 500;
  cfg.stall_generations = 5;
  cfg.population_size = 4;
  cfg.elite_count = 1;
  const auto result = evolve(g, cfg, CostParams{});
  EXPECT_EQ(result.history.size(), 6u);
}

TEST(GAConfig, Validation) {
  GAConfig cfg;
  EXPECT_NO_THROW(validate(cfg));
  cfg.population_size = 1;
  EXPECT_THROW(validate(cfg), InvalidParameter);
  cfg = {};
  cfg.mutation_fraction = 1.5;
  EXPECT_THROW(validate(cfg), InvalidParameter);
  cfg = {};
  cfg.elite_count = cfg.population_size;
  EXPECT_THROW(validate(cfg), InvalidParameter);
}
