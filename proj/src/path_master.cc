#include "path_master.h"

#include <cmath>
#include <string>

#include "cmcf/errors.h"
#include "cmcf/shortest_path.h"

namespace cmcf {
namespace internal {

PathMaster::PathMaster(const Instance& inst, bool capacity_rules)
    : inst_(inst),
      solver_(std::make_unique<lp::SimplexSolver>()),
      capacity_rules_(capacity_rules) {}

void PathMaster::AddCommodityRows() {
  const int K = inst_.num_commodities();
  coverage_row_.resize(K);
  y_col_.resize(K);
  for (int k = 0; k < K; ++k) {
    coverage_row_[k] =
        lp_.AddRow(lp::RowSense::kLessEqual, -1.0, "cover_" + std::to_string(k));
  }
  for (int k = 0; k < K; ++k) {
    lp::Entry e{coverage_row_[k], -1.0};
    double cost = inst_.penalty() * inst_.commodity(k).bandwidth;
    y_col_[k] = lp_.AddColumn(cost, 0.0, lp::kInfinity, {&e, 1},
                              "y_" + std::to_string(k));
  }
}

int PathMaster::AddPathColumn(int k, const std::vector<int>& arcs,
                              double lower, double upper) {
  std::vector<lp::Entry> entries;
  entries.push_back({coverage_row_[k], -1.0});
  PathEntries(k, arcs, entries);
  int col = lp_.AddColumn(0.0, lower, upper, entries,
                          "x_" + std::to_string(k) + "_" +
                              std::to_string(paths_.size()));
  path_index_[{k, arcs}] = static_cast<int>(paths_.size());
  paths_.push_back({k, arcs, col, lower, upper});
  ++paths_added_;
  return col;
}

int PathMaster::AddPath(const Path& path, double lower, double upper) {
  const Commodity& c = inst_.commodity(path.commodity);
  if (!IsSimplePath(inst_.network(), c.source, c.target, path.arcs)) {
    throw ConfigError("path is not a simple source-target path");
  }
  auto it = path_index_.find({path.commodity, path.arcs});
  if (it != path_index_.end()) {
    PathColumn& p = paths_[it->second];
    p.lower = lower;
    p.upper = upper;
    lp_.SetColumnBounds(p.col, lower, upper);
    return p.col;
  }
  return AddPathColumn(path.commodity, path.arcs, lower, upper);
}

void PathMaster::ApplyRestrictions(const Restrictions& restrictions) {
  const int K = inst_.num_commodities();
  admissible_.assign(K, {});
  for (int k = 0; k < K; ++k) {
    admissible_[k] = restrictions.Admissible(inst_, k, capacity_rules_);
    switch (restrictions.y_fix(k)) {
      case YFix::kFree:
        lp_.SetColumnBounds(y_col_[k], 0.0, lp::kInfinity);
        break;
      case YFix::kZero:
        lp_.SetColumnBounds(y_col_[k], 0.0, 0.0);
        break;
      case YFix::kOne:
        lp_.SetColumnBounds(y_col_[k], 1.0, 1.0);
        break;
    }
  }
  for (const PathColumn& p : paths_) {
    bool active = restrictions.y_fix(p.commodity) != YFix::kOne;
    for (int a : p.arcs) {
      if (!admissible_[p.commodity][a]) active = false;
    }
    if (active) {
      lp_.SetColumnBounds(p.col, p.lower, p.upper);
    } else {
      lp_.SetColumnBounds(p.col, 0.0, 0.0);
    }
  }
}

int PathMaster::PricePaths(const std::vector<double>& lambda,
                           double tolerance) {
  int added = 0;
  std::vector<double> weights;
  for (int k = 0; k < inst_.num_commodities(); ++k) {
    if (restrictions_->y_fix(k) == YFix::kOne) continue;
    const Commodity& c = inst_.commodity(k);
    double alpha = lambda[coverage_row_[k]];
    PathWeights(k, lambda, weights);
    auto sp = ShortestPath(inst_.network(), c.source, c.target, weights,
                           admissible_[k]);
    if (!sp) continue;
    double reduced = -alpha + sp->cost;
    if (reduced >= -tolerance * (1.0 + std::fabs(alpha))) continue;
    if (path_index_.count({k, sp->arcs})) continue;
    AddPathColumn(k, sp->arcs, 0.0, lp::kInfinity);
    ++added;
  }
  return added;
}

RelaxationResult PathMaster::Solve(const Restrictions& restrictions,
                                   const ColGenOptions& options) {
  restrictions_ = &restrictions;
  if (!(options.lp == solver_options_)) {
    solver_options_ = options.lp;
    solver_ = std::make_unique<lp::SimplexSolver>(solver_options_);
  }
  ApplyRestrictions(restrictions);
  ApplyArcRestrictions(restrictions);
  RelaxationResult result;
  ColGenStats& stats = result.stats;
  const int paths_before = paths_added_;
  const int cols_before = lp_.num_cols();
  lp::LpSolution sol;
  std::vector<double> lambda;
  bool farkas = false;
  for (int round = 0;; ++round) {
    if (round >= options.max_iterations) {
      throw ConvergenceError(std::string(name()) +
                             ": column generation did not converge in " +
                             std::to_string(options.max_iterations) +
                             " rounds (" + std::to_string(lp_.num_cols()) +
                             " columns)");
    }
    sol = solver_->Solve(lp_);
    stats.lp_iterations += sol.iterations;
    ++stats.iterations;
    if (sol.status == lp::LpStatus::kUnbounded) {
      throw SolverError(std::string(name()) + ": restricted master unbounded");
    }
    farkas = sol.status == lp::LpStatus::kInfeasible;
    if (farkas) {
      ++stats.farkas_rounds;
    } else {
      stats.bound_trajectory.push_back(sol.objective);
    }
    lambda.assign(sol.duals.size(), 0.0);
    for (size_t i = 0; i < sol.duals.size(); ++i) lambda[i] = -sol.duals[i];

    int added = 0;
    if (options.price_paths) added += PricePaths(lambda, options.price_tolerance);
    if (options.price_arc_columns) {
      added += PriceArcColumns(lambda, farkas, options.price_tolerance, stats);
    }
    if (added == 0) {
      result.converged = true;
      break;
    }
    if (options.deadline && Clock::now() >= *options.deadline) break;
  }
  stats.path_columns = paths_added_ - paths_before;
  stats.arc_columns =
      (lp_.num_cols() - cols_before) - stats.path_columns;

  result.feasible = !farkas;
  result.bound = farkas ? lp::kInfinity : sol.objective;
  const int K = inst_.num_commodities();
  result.solution.commodities.assign(K, {});
  for (int k = 0; k < K; ++k) {
    result.solution.commodities[k].rejected = sol.primal[y_col_[k]];
  }
  for (const PathColumn& p : paths_) {
    double v = sol.primal[p.col];
    if (v > 1e-9) {
      result.solution.commodities[p.commodity].paths.push_back({p.arcs, v});
    }
  }
  CollectArcResults(sol, result);
  return result;
}

}  // namespace internal
}  // namespace cmcf
