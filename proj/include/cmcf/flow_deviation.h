#ifndef CMCF_FLOW_DEVIATION_H_
#define CMCF_FLOW_DEVIATION_H_

#include <span>
#include <vector>

#include "cmcf/cost_function.h"
#include "cmcf/flow_solution.h"
#include "cmcf/network.h"

namespace cmcf {

struct FlowDeviationOptions {
  double tolerance = 1e-6;  // relative Frank-Wolfe gap
  int max_iterations = 1000;
  // Kleinrock costs are continued past switch_fraction * d by their
  // second-order Taylor polynomial at that point.
  double switch_fraction = 0.99;
  int line_search_iterations = 80;
};

struct FwState {
  std::vector<double> loads;
  FlowSolution solution;  // path decomposition of loads
  double objective = 0.0;  // modified objective
  double gap = 0.0;        // absolute Frank-Wolfe gap at the last iterate
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_trajectory;
};

// Cost and slope used by flow deviation: r itself, except Kleinrock past the
// switch point, which gets the C1 quadratic continuation.
double SmoothedCost(const CostFunction& r, double x, double switch_fraction,
                    double scale = 1.0);
double SmoothedDerivative(const CostFunction& r, double x,
                          double switch_fraction, double scale = 1.0);

// Every commodity entirely on its least-weight path. Throws ConfigError when
// a commodity has no path. `routes`, when given, receives the paths.
std::vector<double> AllOrNothing(const Instance& inst,
                                 std::span<const double> weights,
                                 FlowSolution* routes = nullptr);

// Uncapacitated splittable problem (capacities ignored, nothing rejected).
FwState RunFlowDeviation(const Instance& inst,
                         const FlowDeviationOptions& options = {});

}  // namespace cmcf

#endif  // CMCF_FLOW_DEVIATION_H_
