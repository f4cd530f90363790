#include "cmcf/flow_solution.h"

#include <cmath>
#include <sstream>

namespace cmcf {

bool IsSimplePath(const Network& network, int source, int target,
                  const std::vector<int>& arcs) {
  if (arcs.empty()) return false;
  std::vector<char> seen(network.num_nodes(), 0);
  int at = source;
  seen[at] = 1;
  for (int id : arcs) {
    if (id < 0 || id >= network.num_arcs()) return false;
    const Arc& arc = network.arc(id);
    if (arc.tail != at) return false;
    at = arc.head;
    if (seen[at]) return false;
    seen[at] = 1;
  }
  return at == target;
}

FlowSolution FlowSolution::AllRejected(const Instance& inst) {
  FlowSolution sol;
  sol.commodities.resize(inst.num_commodities());
  for (CommodityFlow& flow : sol.commodities) flow.rejected = 1.0;
  return sol;
}

std::vector<double> FlowSolution::ArcLoads(const Instance& inst) const {
  std::vector<double> loads(inst.num_arcs(), 0.0);
  for (std::size_t k = 0; k < commodities.size(); ++k) {
    double b = inst.commodity(static_cast<int>(k)).bandwidth;
    for (const PathFlow& path : commodities[k].paths) {
      for (int a : path.arcs) loads[a] += b * path.ratio;
    }
  }
  return loads;
}

bool FlowSolution::IsIntegral(double tol) const {
  auto near_binary = [tol](double v) {
    return std::fabs(v) <= tol || std::fabs(v - 1.0) <= tol;
  };
  for (const CommodityFlow& flow : commodities) {
    if (!near_binary(flow.rejected)) return false;
    for (const PathFlow& path : flow.paths) {
      if (!near_binary(path.ratio)) return false;
    }
  }
  return true;
}

double FlowCost(const Instance& inst, const std::vector<double>& loads) {
  double total = 0.0;
  for (const Arc& arc : inst.network().arcs()) {
    total += arc.cost.Evaluate(loads[arc.id]);
  }
  return total;
}

double Objective(const Instance& inst, const FlowSolution& sol) {
  double total = FlowCost(inst, sol.ArcLoads(inst));
  for (std::size_t k = 0; k < sol.commodities.size(); ++k) {
    total += inst.penalty() * inst.commodity(static_cast<int>(k)).bandwidth *
             sol.commodities[k].rejected;
  }
  return total;
}

const char* ViolationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kStructure:
      return "structure";
    case Violation::Kind::kPath:
      return "path";
    case Violation::Kind::kRatio:
      return "ratio";
    case Violation::Kind::kCoverage:
      return "coverage";
    case Violation::Kind::kCapacity:
      return "capacity";
  }
  return "unknown";
}

std::vector<Violation> CheckFeasible(const Instance& inst,
                                     const FlowSolution& sol, double tol) {
  std::vector<Violation> out;
  if (static_cast<int>(sol.commodities.size()) != inst.num_commodities()) {
    out.push_back({Violation::Kind::kStructure, -1,
                   std::fabs(static_cast<double>(sol.commodities.size()) -
                             inst.num_commodities()),
                   "commodity count mismatch"});
    return out;
  }
  for (int k = 0; k < inst.num_commodities(); ++k) {
    const Commodity& c = inst.commodity(k);
    const CommodityFlow& flow = sol.commodities[k];
    double covered = flow.rejected;
    if (flow.rejected < -tol || flow.rejected > 1.0 + tol) {
      out.push_back({Violation::Kind::kRatio, k,
                     flow.rejected < 0 ? -flow.rejected : flow.rejected - 1.0,
                     "rejection ratio outside [0,1]"});
    }
    for (const PathFlow& path : flow.paths) {
      if (!IsSimplePath(inst.network(), c.source, c.target, path.arcs)) {
        std::ostringstream msg;
        msg << "invalid path for commodity " << k;
        out.push_back({Violation::Kind::kPath, k, 1.0, msg.str()});
      }
      if (path.ratio < -tol || path.ratio > 1.0 + tol) {
        out.push_back({Violation::Kind::kRatio, k,
                       path.ratio < 0 ? -path.ratio : path.ratio - 1.0,
                       "path ratio outside [0,1]"});
      }
      covered += path.ratio;
    }
    if (covered < 1.0 - tol) {
      out.push_back({Violation::Kind::kCoverage, k, 1.0 - covered,
                     "commodity not fully routed or rejected"});
    }
  }
  std::vector<double> loads(inst.num_arcs(), 0.0);
  for (int k = 0; k < inst.num_commodities(); ++k) {
    double b = inst.commodity(k).bandwidth;
    for (const PathFlow& path : sol.commodities[k].paths) {
      for (int a : path.arcs) {
        if (a >= 0 && a < inst.num_arcs()) loads[a] += b * path.ratio;
      }
    }
  }
  for (const Arc& arc : inst.network().arcs()) {
    double excess = loads[arc.id] - arc.capacity;
    if (excess > tol) {
      out.push_back({Violation::Kind::kCapacity, arc.id, excess,
                     "load above capacity"});
    }
  }
  return out;
}

}  // namespace cmcf
