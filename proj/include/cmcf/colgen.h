#ifndef CMCF_COLGEN_H_
#define CMCF_COLGEN_H_

#include <chrono>
#include <optional>
#include <string_view>
#include <vector>

#include "cmcf/flow_solution.h"
#include "cmcf/lp.h"
#include "cmcf/restrictions.h"

namespace cmcf {

using Clock = std::chrono::steady_clock;

struct ColGenOptions {
  // Relative pricing tolerance: a path enters when its reduced cost is below
  // -tol * (1 + |alpha_k|), an arc column when below -tol * (1 + |gamma_a|).
  double price_tolerance = 1e-9;
  int max_iterations = 10000;
  bool price_paths = true;
  // Vertex columns (inner modes) or pattern columns.
  bool price_arc_columns = true;
  std::optional<Clock::time_point> deadline;
  // Engine settings for the restricted master. Pricing cannot resolve
  // reduced costs finer than the engine's dual tolerance.
  lp::SimplexOptions lp;
};

struct ColGenStats {
  int iterations = 0;
  long lp_iterations = 0;
  int path_columns = 0;
  int arc_columns = 0;
  int farkas_rounds = 0;
  // Non-convex black-box vertex searches that used the grid pass.
  int grid_searches = 0;
  // Pattern pricing only.
  long max_dp_states = 0;
  bool bandwidth_rounded = false;
  double bandwidth_scale = 1.0;
  std::vector<double> bound_trajectory;
};

struct ArcColumnValue {
  int arc = 0;
  double load = 0.0;            // vertex c or pattern total
  std::vector<int> commodities;  // pattern members; empty for vertices
  double value = 0.0;            // z or u
};

struct RelaxationResult {
  // False when the node LP is infeasible after Farkas pricing.
  bool feasible = false;
  // False when the deadline stopped column generation early; bound is then
  // only the last RMP value, not a valid lower bound.
  bool converged = false;
  double bound = 0.0;
  FlowSolution solution;
  // Per-arc share of the objective: sum of column weight times column cost.
  std::vector<double> arc_costs;
  // Arc columns with value > 1e-9.
  std::vector<ArcColumnValue> arc_columns;
  ColGenStats stats;
};

// A restricted-master relaxation solved by column generation. One instance
// keeps a single column pool across calls; columns that violate the current
// restrictions are switched off through their bounds, never deleted.
class Relaxation {
 public:
  virtual ~Relaxation() = default;
  virtual std::string_view name() const = 0;
  // Throws ConvergenceError when max_iterations rounds do not converge.
  virtual RelaxationResult Solve(const Restrictions& restrictions,
                                 const ColGenOptions& options) = 0;
  // Adds a path column with explicit bounds (kept across restrictions unless
  // a restriction disables it). Returns the LP column id.
  virtual int AddPath(const Path& path, double lower = 0.0,
                      double upper = lp::kInfinity) = 0;
  virtual int num_columns() const = 0;
  virtual const lp::LinearProgram& program() const = 0;
};

}  // namespace cmcf

#endif  // CMCF_COLGEN_H_
