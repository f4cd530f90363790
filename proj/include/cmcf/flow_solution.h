#ifndef CMCF_FLOW_SOLUTION_H_
#define CMCF_FLOW_SOLUTION_H_

#include <string>
#include <vector>

#include "cmcf/network.h"

namespace cmcf {

// Arc sequence from a commodity's source to its target.
struct Path {
  int commodity = 0;
  std::vector<int> arcs;

  friend bool operator==(const Path&, const Path&) = default;
};

// True when `arcs` chains head-to-tail from source to target without
// revisiting a node.
bool IsSimplePath(const Network& network, int source, int target,
                  const std::vector<int>& arcs);

struct PathFlow {
  std::vector<int> arcs;
  double ratio = 0.0;
};

struct CommodityFlow {
  std::vector<PathFlow> paths;
  double rejected = 0.0;  // y_k
};

// Path-based flow: per commodity, the share x_k^p routed on each path and
// the rejected share y_k.
struct FlowSolution {
  std::vector<CommodityFlow> commodities;

  static FlowSolution AllRejected(const Instance& inst);

  // x_a = sum_k sum_{p ∋ a} b_k x_k^p.
  std::vector<double> ArcLoads(const Instance& inst) const;
  // True when every ratio and y_k is within tol of {0, 1}.
  bool IsIntegral(double tol = 1e-6) const;
};

// sum_a r_a(x_a), idle arcs included.
double FlowCost(const Instance& inst, const std::vector<double>& loads);

// sum_a r_a(x_a) + sum_k M b_k y_k. Throws DomainError past a Kleinrock pole.
double Objective(const Instance& inst, const FlowSolution& sol);

struct Violation {
  enum class Kind { kStructure, kPath, kRatio, kCoverage, kCapacity };
  Kind kind;
  int index;  // commodity or arc id, depending on kind
  double magnitude;
  std::string detail;
};

const char* ViolationKindName(Violation::Kind kind);

// Empty result means feasible within tol.
std::vector<Violation> CheckFeasible(const Instance& inst,
                                     const FlowSolution& sol,
                                     double tol = 1e-6);

}  // namespace cmcf

#endif  // CMCF_FLOW_SOLUTION_H_
