#pragma once

#include <vector>

#include "routeplan/cost.hpp"

namespace routeplan {

/// One point of a convergence curve (generation or iteration).
struct HistoryRecord {
  int iteration = 0;
  double best_cost = 0.0;
  double mean_cost = 0.0;
};

struct SolveResult {
  Evaluation best;
  std::vector<HistoryRecord> history;  // entry 0 is the initial population/swarm
};

}  // namespace routeplan
