#include "cmcf/bnp.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>

#include "cmcf/errors.h"
#include "cmcf/greedy.h"
#include "cmcf/inner.h"
#include "cmcf/pattern.h"

namespace cmcf {
namespace {

struct OpenNode {
  double bound = 0.0;
  int id = 0;
  int parent = -1;
  std::string rule;
  Restrictions restrictions;
};

struct WorseFirst {
  bool operator()(const OpenNode& x, const OpenNode& y) const {
    if (x.bound != y.bound) return x.bound > y.bound;
    return x.id > y.id;
  }
};

double PruneSlack(double incumbent) {
  return 1e-7 * (1.0 + std::fabs(incumbent));
}

// Integral relaxed flow -> one path or rejection per commodity.
FlowSolution RoundIntegral(const FlowSolution& relaxed) {
  FlowSolution out;
  out.commodities.resize(relaxed.commodities.size());
  for (size_t k = 0; k < relaxed.commodities.size(); ++k) {
    const CommodityFlow& f = relaxed.commodities[k];
    const PathFlow* best = nullptr;
    for (const PathFlow& p : f.paths) {
      if (!best || p.ratio > best->ratio) best = &p;
    }
    if (f.rejected > 0.5 || !best || best->ratio < 0.5) {
      out.commodities[k].rejected = 1.0;
    } else {
      out.commodities[k].paths.push_back({best->arcs, 1.0});
    }
  }
  return out;
}

}  // namespace

const char* NodeRelaxationName(NodeRelaxation relaxation) {
  return relaxation == NodeRelaxation::kPattern ? "pattern" : "tight-inner";
}

const char* BnpStatusName(BnpStatus status) {
  switch (status) {
    case BnpStatus::kOptimal:
      return "optimal";
    case BnpStatus::kTimeLimit:
      return "time_limit";
    case BnpStatus::kNodeLimit:
      return "node_limit";
  }
  return "unknown";
}

double GapRatio(double incumbent, double bound) {
  if (incumbent == bound) return 0.0;
  if (incumbent == 0.0) return std::numeric_limits<double>::infinity();
  return (incumbent - bound) / std::fabs(incumbent);
}

double RelativeGap(double splittable, double unsplittable, double relaxed,
                   double tol) {
  if (unsplittable <= splittable + tol) {
    throw DomainError("relative gap undefined: unsplittable optimum equals the "
                      "splittable one");
  }
  return (relaxed - splittable) / (unsplittable - splittable);
}

BnpResult BranchAndPrice(const Instance& inst, const BnpOptions& options) {
  const auto start = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };
  ColGenOptions colgen = options.colgen;
  if (std::isfinite(options.time_limit)) {
    auto limit = start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(options.time_limit));
    if (!colgen.deadline || *colgen.deadline > limit) colgen.deadline = limit;
  }
  std::unique_ptr<Relaxation> relaxation =
      options.relaxation == NodeRelaxation::kPattern
          ? MakePatternRelaxation(inst)
          : MakeInnerRelaxation(inst, InnerMode::kTight);

  BnpResult result;
  GreedyResult greedy =
      MultiStartGreedy(inst, std::max(1, options.greedy_starts), options.seed);
  result.greedy_value = greedy.objective;
  result.incumbent = greedy.solution;
  result.incumbent_value = greedy.objective;
  result.has_incumbent = true;

  std::priority_queue<OpenNode, std::vector<OpenNode>, WorseFirst> open;
  open.push({-std::numeric_limits<double>::infinity(), 0, -1, "root",
             Restrictions(inst)});
  int next_id = 1;

  while (true) {
    double lb = open.empty() ? result.incumbent_value
                             : std::min(open.top().bound, result.incumbent_value);
    result.lower_bound = std::max(result.lower_bound, lb);
    if (open.empty()) {
      result.status = BnpStatus::kOptimal;
      break;
    }
    if (result.nodes > 0 &&
        GapRatio(result.incumbent_value, result.lower_bound) <= options.gap_target) {
      result.status = BnpStatus::kOptimal;
      break;
    }
    if (colgen.deadline && Clock::now() >= *colgen.deadline) {
      result.status = BnpStatus::kTimeLimit;
      break;
    }
    if (result.nodes >= options.max_nodes) {
      result.status = BnpStatus::kNodeLimit;
      break;
    }

    OpenNode node = open.top();
    open.pop();
    TraceRecord rec{node.id, node.parent, node.rule, node.bound, 0.0, ""};
    if (node.bound >= result.incumbent_value - PruneSlack(result.incumbent_value)) {
      rec.outcome = "pruned";
      rec.seconds = elapsed();
      result.trace.push_back(rec);
      continue;
    }

    RelaxationResult rel = relaxation->Solve(node.restrictions, colgen);
    ++result.nodes;
    if (!rel.converged) {
      rec.outcome = "interrupted";
      rec.seconds = elapsed();
      result.trace.push_back(rec);
      open.push(std::move(node));
      result.status = BnpStatus::kTimeLimit;
      break;
    }
    const bool root = node.id == 0;
    if (!rel.feasible) {
      if (root) result.root_bound = rel.bound;
      rec.outcome = "infeasible";
      rec.bound = rel.bound;
      rec.seconds = elapsed();
      result.trace.push_back(rec);
      continue;
    }
    double bound = std::max(rel.bound, node.bound);
    rec.bound = bound;
    if (root) result.root_bound = rel.bound;

    int k = SelectBranchingCommodity(inst, rel.solution);
    if (k < 0) {
      if (root) result.root_integral = true;
      if (options.observer.on_integral) options.observer.on_integral(node.id, rel);
      FlowSolution sol = RoundIntegral(rel.solution);
      if (CheckFeasible(inst, sol).empty()) {
        double value = Objective(inst, sol);
        if (value < result.incumbent_value) {
          result.incumbent_value = value;
          result.incumbent = std::move(sol);
        }
      }
      rec.outcome = "integral";
      rec.seconds = elapsed();
      result.trace.push_back(rec);
      continue;
    }
    if (bound >= result.incumbent_value - PruneSlack(result.incumbent_value)) {
      rec.outcome = "pruned";
      rec.seconds = elapsed();
      result.trace.push_back(rec);
      continue;
    }
    std::vector<BranchChild> children =
        Branch(inst, node.restrictions, k, rel.solution.commodities[k]);
    if (options.observer.on_branch) {
      BranchEvent ev{node.id, k, &node.restrictions, &rel, &children};
      options.observer.on_branch(ev);
    }
    for (BranchChild& c : children) {
      open.push({bound, next_id++, node.id, c.rule, std::move(c.restrictions)});
    }
    rec.outcome = "branched";
    rec.seconds = elapsed();
    result.trace.push_back(rec);
  }
  result.columns = relaxation->num_columns();
  return result;
}

}  // namespace cmcf
