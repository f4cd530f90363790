#ifndef CMCF_BNP_H_
#define CMCF_BNP_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cmcf/branching.h"
#include "cmcf/colgen.h"
#include "cmcf/flow_solution.h"
#include "cmcf/network.h"

namespace cmcf {

enum class NodeRelaxation { kTight, kPattern };

const char* NodeRelaxationName(NodeRelaxation relaxation);

enum class BnpStatus {
  kOptimal,     // gap target reached or tree exhausted
  kTimeLimit,
  kNodeLimit,
};

const char* BnpStatusName(BnpStatus status);

struct BranchEvent {
  int node_id = 0;
  int commodity = 0;
  const Restrictions* parent = nullptr;
  const RelaxationResult* relaxed = nullptr;
  const std::vector<BranchChild>* children = nullptr;
};

struct BnpObserver {
  std::function<void(const BranchEvent&)> on_branch;
  // Called for every node whose relaxed solution is integral.
  std::function<void(int node_id, const RelaxationResult&)> on_integral;
};

struct BnpOptions {
  NodeRelaxation relaxation = NodeRelaxation::kPattern;
  double gap_target = 1e-3;
  double time_limit = std::numeric_limits<double>::infinity();  // seconds
  int max_nodes = std::numeric_limits<int>::max();
  std::uint64_t seed = 1;
  int greedy_starts = 16;
  ColGenOptions colgen;
  BnpObserver observer;
};

struct TraceRecord {
  int node = 0;
  int parent = -1;
  std::string rule;
  double bound = 0.0;
  double seconds = 0.0;
  std::string outcome;  // "branched", "integral", "pruned", "infeasible"
};

struct BnpResult {
  BnpStatus status = BnpStatus::kOptimal;
  bool has_incumbent = false;
  FlowSolution incumbent;
  double incumbent_value = std::numeric_limits<double>::infinity();
  double lower_bound = -std::numeric_limits<double>::infinity();
  double root_bound = 0.0;
  bool root_integral = false;
  double greedy_value = std::numeric_limits<double>::infinity();
  int nodes = 0;
  int columns = 0;
  std::vector<TraceRecord> trace;
};

// Best-bound-first branch-and-price for the unsplittable problem. The root
// incumbent comes from the multi-start greedy heuristic.
BnpResult BranchAndPrice(const Instance& inst, const BnpOptions& options);

// (incumbent - bound) / |incumbent|; 0 when both are 0.
double GapRatio(double incumbent, double bound);

// (R - S) / (U - S). Throws DomainError when U <= S + tol.
double RelativeGap(double splittable, double unsplittable, double relaxed,
                   double tol = 1e-9);

}  // namespace cmcf

#endif  // CMCF_BNP_H_
