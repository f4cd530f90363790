#ifndef CMCF_BRANCHING_H_
#define CMCF_BRANCHING_H_

#include <string>
#include <vector>

#include "cmcf/flow_solution.h"
#include "cmcf/network.h"
#include "cmcf/restrictions.h"

namespace cmcf {

struct Divergence {
  int node = 0;              // v_k
  std::vector<int> common;   // shared arc prefix, from s_k to v_k
};

// Longest common arc prefix of the given paths (all starting at source).
// Requires at least two distinct paths.
Divergence FindDivergence(const Network& network, int source,
                          const std::vector<std::vector<int>>& paths);

struct BranchChild {
  Restrictions restrictions;
  std::string rule;  // "y=0", "y=1", "A", "B", "C(<node>)", "D"
};

// Children of `parent` for fractional commodity k with relaxed flow `flow`.
//
// At most one fractional path and y_k free: y_k = 0 / y_k = 1. Otherwise,
// with P+ the paths carrying flow, v_k their divergence node and a* the
// out-arc of v_k carrying the most flow (smallest id on ties):
//   A     prefix forced, every out-arc of v_k but a* forbidden, y_k = 0
//   B     prefix forced, a* forbidden, y_k = 0
//   C(u)  for each prefix node u before v_k: prefix forced up to u, the
//         common arc out of u forbidden, y_k = 0
//   D     y_k = 1, only when y_k was free
// "Prefix forced" means every other out-arc of the prefix nodes is
// forbidden, which makes the children pairwise disjoint.
//
// Throws std::logic_error when k is not fractional.
std::vector<BranchChild> Branch(const Instance& inst,
                                const Restrictions& parent, int k,
                                const CommodityFlow& flow,
                                double tol = 1e-6);

// Fractional commodity with the largest bandwidth (smallest id on ties), -1
// when the solution is integral within tol.
int SelectBranchingCommodity(const Instance& inst, const FlowSolution& sol,
                             double tol = 1e-6);

bool IsFractional(const CommodityFlow& flow, double tol = 1e-6);

}  // namespace cmcf

#endif  // CMCF_BRANCHING_H_
