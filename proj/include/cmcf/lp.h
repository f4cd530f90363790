#ifndef CMCF_LP_H_
#define CMCF_LP_H_

#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cmcf {
namespace lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

struct Entry {
  int row = 0;
  double value = 0.0;
};

// Minimization LP built row by row and column by column. Columns may be added
// at any time (column generation); bounds and costs may be changed in place.
class LinearProgram {
 public:
  struct Row {
    RowSense sense = RowSense::kLessEqual;
    double rhs = 0.0;
    std::string name;
  };
  struct Column {
    double cost = 0.0;
    double lower = 0.0;
    double upper = kInfinity;
    std::vector<Entry> entries;
    std::string name;
  };

  int AddRow(RowSense sense, double rhs, std::string name = {});
  // Throws std::out_of_range on a bad row reference and
  // std::invalid_argument when lower > upper.
  int AddColumn(double cost, double lower, double upper,
                std::span<const Entry> entries = {}, std::string name = {});
  void SetColumnBounds(int col, double lower, double upper);
  void SetColumnCost(int col, double cost);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return static_cast<int>(cols_.size()); }
  const Row& row(int i) const { return rows_[i]; }
  const Column& column(int j) const { return cols_[j]; }

  // Plain-text dump: objective line, one line per row, then bounds. Stable
  // across runs for diffing.
  std::string DebugString() const;

 private:
  std::vector<Row> rows_;
  std::vector<Column> cols_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

// Duals follow the "reduced cost = c_j - sum_i dual_i a_ij" convention. The
// sign-normalized multiplier() is -dual: nonnegative for <= rows at an
// optimum of a minimization, which is the sign the pricing rules expect for
// every row type. When status is kInfeasible the duals are the phase-one
// (Farkas) multipliers of the final infeasibility-minimizing basis.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> primal;
  std::vector<double> row_activity;
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  int iterations = 0;

  double multiplier(int row) const { return -duals[row]; }
};

class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual std::string_view name() const = 0;
  // Never throws for infeasible/unbounded programs; throws SolverError on
  // numerical breakdown.
  virtual LpSolution Solve(const LinearProgram& program) = 0;
};

struct SimplexOptions {
  double primal_tolerance = 1e-9;
  double dual_tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
  int refactor_interval = 100;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_limit = 1000;
  // 0 selects max(100000, 50 * (rows + cols)).
  int max_iterations = 0;

  friend bool operator==(const SimplexOptions&, const SimplexOptions&) = default;
};

// Bounded-variable primal simplex with a dense explicit basis inverse.
// Keeps the last basis and warm-starts the next Solve() when the row count is
// unchanged and columns were only appended.
class SimplexSolver : public LpBackend {
 public:
  explicit SimplexSolver(SimplexOptions options = {});
  ~SimplexSolver() override;

  std::string_view name() const override { return "builtin"; }
  LpSolution Solve(const LinearProgram& program) override;

  // Drops the cached basis.
  void Reset();

 private:
  class Engine;
  SimplexOptions options_;
  std::unique_ptr<Engine> engine_;
};

// "builtin" is the only engine compiled in. Throws ConfigError otherwise.
std::unique_ptr<LpBackend> MakeBackend(std::string_view name);
// Reads CMCF_LP_BACKEND (default "builtin").
std::unique_ptr<LpBackend> MakeDefaultBackend();

}  // namespace lp
}  // namespace cmcf

#endif  // CMCF_LP_H_
