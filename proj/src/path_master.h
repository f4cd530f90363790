#ifndef CMCF_SRC_PATH_MASTER_H_
#define CMCF_SRC_PATH_MASTER_H_

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "cmcf/colgen.h"
#include "cmcf/lp.h"
#include "cmcf/network.h"

namespace cmcf {
namespace internal {

// Shared machinery of the three path-based masters: coverage rows, y
// columns, the path pool, restriction handling and the solve/price loop.
// Subclasses own the arc rows and arc columns.
class PathMaster : public Relaxation {
 public:
  RelaxationResult Solve(const Restrictions& restrictions,
                         const ColGenOptions& options) override;
  int AddPath(const Path& path, double lower, double upper) override;
  int num_columns() const override { return lp_.num_cols(); }
  const lp::LinearProgram& program() const override { return lp_; }

 protected:
  PathMaster(const Instance& inst, bool capacity_rules);

  // Adds coverage rows and y columns; call after the arc rows exist.
  void AddCommodityRows();

  // Row entries of a path column, coverage excluded.
  virtual void PathEntries(int k, const std::vector<int>& arcs,
                           std::vector<lp::Entry>& out) const = 0;
  // w_a such that the path reduced cost is -alpha_k + sum_{a in p} w_a.
  virtual void PathWeights(int k, const std::vector<double>& lambda,
                           std::vector<double>& weights) const = 0;
  // Adds improving arc columns, returns how many. farkas = RMP infeasible,
  // price with zero column costs.
  virtual int PriceArcColumns(const std::vector<double>& lambda, bool farkas,
                              double tolerance, ColGenStats& stats) = 0;
  virtual void ApplyArcRestrictions(const Restrictions&) {}
  virtual void CollectArcResults(const lp::LpSolution& sol,
                                 RelaxationResult& result) const = 0;

  const Instance& inst_;
  lp::LinearProgram lp_;
  std::unique_ptr<lp::SimplexSolver> solver_;
  lp::SimplexOptions solver_options_;
  const Restrictions* restrictions_ = nullptr;
  std::vector<std::vector<char>> admissible_;  // per commodity, this solve

 private:
  struct PathColumn {
    int commodity = 0;
    std::vector<int> arcs;
    int col = 0;
    double lower = 0.0;
    double upper = lp::kInfinity;
  };

  int AddPathColumn(int k, const std::vector<int>& arcs, double lower,
                    double upper);
  void ApplyRestrictions(const Restrictions& restrictions);
  int PricePaths(const std::vector<double>& lambda, double tolerance);

  bool capacity_rules_;
  std::vector<int> coverage_row_;
  std::vector<int> y_col_;
  std::vector<PathColumn> paths_;
  std::map<std::pair<int, std::vector<int>>, int> path_index_;
  int paths_added_ = 0;
};

}  // namespace internal
}  // namespace cmcf

#endif  // CMCF_SRC_PATH_MASTER_H_
