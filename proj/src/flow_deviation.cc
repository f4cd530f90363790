#include "cmcf/flow_deviation.h"

#include <cmath>
#include <map>
#include <string>

#include "cmcf/errors.h"
#include "cmcf/one_dim.h"
#include "cmcf/shortest_path.h"

namespace cmcf {

double SmoothedCost(const CostFunction& r, double x, double switch_fraction,
                    double /*scale*/) {
  if (r.kind() == CostKind::kKleinrock) {
    double s = switch_fraction * r.d();
    if (x > s) {
      double t = x - s;
      return r.Evaluate(s) + r.Derivative(s) * t +
             0.5 * r.SecondDerivative(s) * t * t;
    }
  }
  return r.Evaluate(std::max(0.0, x));
}

double SmoothedDerivative(const CostFunction& r, double x,
                          double switch_fraction, double scale) {
  if (r.kind() == CostKind::kKleinrock) {
    double s = switch_fraction * r.d();
    if (x > s) return r.Derivative(s) + r.SecondDerivative(s) * (x - s);
  }
  return r.Derivative(std::max(0.0, x), scale);
}

std::vector<double> AllOrNothing(const Instance& inst,
                                 std::span<const double> weights,
                                 FlowSolution* routes) {
  std::vector<double> loads(inst.num_arcs(), 0.0);
  if (routes) routes->commodities.assign(inst.num_commodities(), {});
  for (const Commodity& c : inst.commodities()) {
    auto sp = ShortestPath(inst.network(), c.source, c.target, weights);
    if (!sp) {
      throw ConfigError("commodity " + std::to_string(c.id) +
                        " has no path in the network");
    }
    for (int a : sp->arcs) loads[a] += c.bandwidth;
    if (routes) routes->commodities[c.id].paths.push_back({sp->arcs, 1.0});
  }
  return loads;
}

FwState RunFlowDeviation(const Instance& inst,
                         const FlowDeviationOptions& options) {
  const Network& net = inst.network();
  const int A = net.num_arcs();
  const double sf = options.switch_fraction;
  auto total_cost = [&](const std::vector<double>& x) {
    double s = 0.0;
    for (int a = 0; a < A; ++a) {
      s += SmoothedCost(net.arc(a).cost, x[a], sf, net.arc(a).capacity);
    }
    return s;
  };
  auto slopes = [&](const std::vector<double>& x) {
    std::vector<double> w(A);
    for (int a = 0; a < A; ++a) {
      w[a] = SmoothedDerivative(net.arc(a).cost, x[a], sf,
                                std::max(1.0, net.arc(a).capacity));
    }
    return w;
  };

  FwState st;
  std::vector<std::map<std::vector<int>, double>> flows(inst.num_commodities());
  FlowSolution routes;
  st.loads = AllOrNothing(inst, slopes(std::vector<double>(A, 0.0)), &routes);
  for (int k = 0; k < inst.num_commodities(); ++k) {
    flows[k][routes.commodities[k].paths[0].arcs] = 1.0;
  }
  st.objective = total_cost(st.loads);
  st.objective_trajectory.push_back(st.objective);

  std::vector<double> trial(A);
  while (st.iterations < options.max_iterations) {
    ++st.iterations;
    std::vector<double> w = slopes(st.loads);
    std::vector<double> target = AllOrNothing(inst, w, &routes);
    double gap = 0.0;
    for (int a = 0; a < A; ++a) gap += w[a] * (st.loads[a] - target[a]);
    st.gap = gap;
    if (gap <= options.tolerance * std::max(1e-12, std::fabs(st.objective))) {
      st.converged = true;
      break;
    }
    auto along = [&](double theta) {
      for (int a = 0; a < A; ++a) {
        trial[a] = st.loads[a] + theta * (target[a] - st.loads[a]);
      }
      return -total_cost(trial);
    };
    OneDimResult step = GoldenSectionMaximize(along, 0.0, 1.0,
                                              options.line_search_iterations);
    double theta = step.x;
    if (-step.value > st.objective) theta = 0.0;
    if (theta <= 0.0) {
      // No descent along the direction: the gap is numerical noise.
      st.converged = gap <= 1e-9 * (1.0 + std::fabs(st.objective));
      break;
    }
    for (int a = 0; a < A; ++a) {
      st.loads[a] += theta * (target[a] - st.loads[a]);
    }
    for (int k = 0; k < inst.num_commodities(); ++k) {
      for (auto& [arcs, ratio] : flows[k]) ratio *= 1.0 - theta;
      flows[k][routes.commodities[k].paths[0].arcs] += theta;
    }
    st.objective = total_cost(st.loads);
    st.objective_trajectory.push_back(st.objective);
  }

  st.solution.commodities.assign(inst.num_commodities(), {});
  for (int k = 0; k < inst.num_commodities(); ++k) {
    for (const auto& [arcs, ratio] : flows[k]) {
      if (ratio > 1e-12) st.solution.commodities[k].paths.push_back({arcs, ratio});
    }
  }
  return st;
}

}  // namespace cmcf
