#pragma once

#include "routeplan/graph.hpp"
#include "routeplan/route.hpp"

namespace routeplan {

struct CostParams {
  double phi1 = 0.5;   // task-cost weight
  double phi2 = 0.5;   // route-cost weight
  double gamma = 100.0;
  double eta = 1.0;    // risk coefficient
  double beta = 1.0;   // priority coefficient
  double v_auv = 2.5;  // m/s
  double t_available = 25200.0;  // s
  double penalty = 1e6;
  /// Use (t_route - t_available) instead of |t_route - t_available|.
  bool signed_route_gap = false;
};

/// Throws InvalidParameter naming the first bad field.
void validate(const CostParams& p);

struct CostBreakdown {
  double cost_task = 0.0;
  double cost_route = 0.0;
  double viol = 0.0;
  double cost_total = 0.0;
  double t_travel = 0.0;
};

/// max(1 - t_available / t_travel, 0). Both times must be positive.
double violation(double t_travel, double t_available);

double cost_route(const RouteMetrics& m, const CostParams& p);

/// eta * sum(risk) / (beta * sum(priority)); the penalty for an edgeless route.
double cost_task(const RouteMetrics& m, const CostParams& p);

/// phi1 * cost_task + phi2 * cost_route, or the penalty when the report
/// carries a structural violation. Time overruns are priced through viol.
CostBreakdown cost_total(const RouteMetrics& m, const ValidationReport& report, const CostParams& p);

/// Everything known about one candidate route.
struct Evaluation {
  Route route;
  RouteMetrics metrics;       // zero when the route uses a non-edge
  bool metrics_defined = false;
  ValidationReport report;
  CostBreakdown cost;
  /// What the optimizers minimize: cost.cost_total for feasible routes,
  /// the penalty for anything failing validation.
  double objective = 0.0;

  bool feasible() const { return report.feasible; }
};

Evaluation evaluate(Route route, const MissionGraph& g, const CostParams& p);

}  // namespace routeplan
