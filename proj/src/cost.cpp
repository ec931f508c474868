#include "routeplan/cost.hpp"

#include <cmath>
#include <utility>

#include "routeplan/error.hpp"

namespace routeplan {

void validate(const CostParams& p) {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!finite_nonneg(p.phi1) || !finite_nonneg(p.phi2) || !(p.phi1 + p.phi2 > 0.0))
    throw InvalidParameter("cost.phi1/phi2 must be non-negative with a positive sum");
  if (!finite_nonneg(p.gamma)) throw InvalidParameter("cost.gamma must be non-negative");
  if (!(p.eta > 0.0) || !std::isfinite(p.eta)) throw InvalidParameter("cost.eta must be positive");
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) throw InvalidParameter("cost.beta must be positive");
  if (!(p.v_auv > 0.0) || !std::isfinite(p.v_auv)) throw InvalidParameter("cost.v_auv must be positive");
  if (!(p.t_available > 0.0) || !std::isfinite(p.t_available))
    throw InvalidParameter("cost.t_available must be positive");
  if (!(p.penalty > 0.0) || !std::isfinite(p.penalty)) throw InvalidParameter("cost.penalty must be positive");
}

double violation(double t_travel, double t_available) {
  if (!(t_travel > 0.0) || !(t_available > 0.0))
    throw InvalidParameter("violation needs positive travel and available times");
  return std::max(1.0 - t_available / t_travel, 0.0);
}

double cost_route(const RouteMetrics& m, const CostParams& p) {
  const double gap = p.signed_route_gap ? m.t_route - p.t_available : std::abs(m.t_route - p.t_available);
  const double viol = m.t_route > 0.0 ? violation(m.t_route, p.t_available) : 0.0;
  return gap / p.t_available * (1.0 + p.gamma * viol);
}

double cost_task(const RouteMetrics& m, const CostParams& p) {
  if (m.n_tasks == 0 || !(m.sum_priority > 0.0)) return p.penalty;
  return (p.eta * m.sum_risk) / (p.beta * m.sum_priority);
}

CostBreakdown cost_total(const RouteMetrics& m, const ValidationReport& report, const CostParams& p) {
  CostBreakdown b;
  b.t_travel = m.t_route;
  b.viol = m.t_route > 0.0 ? violation(m.t_route, p.t_available) : 0.0;
  b.cost_task = cost_task(m, p);
  b.cost_route = cost_route(m, p);
  b.cost_total = report.structurally_invalid() ? p.penalty : p.phi1 * b.cost_task + p.phi2 * b.cost_route;
  return b;
}

Evaluation evaluate(Route route, const MissionGraph& g, const CostParams& p) {
  Evaluation e;
  e.route = std::move(route);
  e.report = validate_structure(e.route, g);
  if (!e.report.has(Violation::nonexistent_edge)) {
    e.metrics = route_metrics(e.route, g, p.v_auv);
    e.metrics_defined = true;
    e.report = validate(e.route, g, e.metrics, p.t_available);
  }
  e.cost = cost_total(e.metrics, e.report, p);
  e.objective = e.report.feasible ? e.cost.cost_total : p.penalty;
  return e;
}

}  // namespace routeplan
