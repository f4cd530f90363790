#ifndef CMCF_SCALING_H_
#define CMCF_SCALING_H_

#include <utility>
#include <vector>

#include "cmcf/network.h"

namespace cmcf {

// Unaccepted bandwidth of the compact linear program
//   min sum_k b_k y_k  s.t. flow conservation with supply 1 - y_k,
//   sum_k b_k x_ak <= c_a, 0 <= x, 0 <= y <= 1.
// 0 (within tolerance) iff every commodity fits splittably.
double MaxAcceptance(const Instance& inst);

struct ScalingStep {
  double factor = 0.0;
  bool feasible = false;
  double unaccepted = 0.0;
};

struct ScalingReport {
  double tau = 0.0;
  std::vector<ScalingStep> steps;
  double multiplier = 0.0;  // tau * 1.05
  double tolerance = 0.0;
};

// Capacities multiplied by `factor`; costs re-fitted so every r_a(c_a) is
// unchanged (Kleinrock keeps d / c). M is recomputed.
Instance ScaleCapacities(const Instance& inst, double factor);

// Smallest factor tau (bisection to a 1.01 ratio) at which the instance is
// fully acceptable, then the instance scaled by tau * 1.05. Throws
// ScalingError when no factor up to 2^20 works.
std::pair<Instance, ScalingReport> ScaleToCongestion(const Instance& inst);

}  // namespace cmcf

#endif  // CMCF_SCALING_H_
