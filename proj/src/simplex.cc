#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cmcf/errors.h"
#include "cmcf/lp.h"
#include "cmcf/simd/kernels.h"

namespace cmcf {
namespace lp {

// Variables 0..n-1 are the structural columns, n..n+m-1 the logicals: row i
// reads  sum_j a_ij x_j + s_i = rhs_i  with s_i in [0, inf) for <=, [0, 0]
// for = and (-inf, 0] for >=.
class SimplexSolver::Engine {
 public:
  explicit Engine(const SimplexOptions& options) : options_(options) {}

  LpSolution Solve(const LinearProgram& program);
  void Reset() { has_basis_ = false; }

 private:
  enum class Status : unsigned char { kBasic, kAtLower, kAtUpper, kFreeZero };

  struct Candidate {
    int var = -1;
    double reduced_cost = 0.0;
  };

  void LoadProgram(const LinearProgram& program);
  void InitializeBasis();
  void PlaceNonbasic(int var);
  void Refactor();
  void ComputeBasicValues();
  bool ComputePhaseCosts();  // true when the basis is primal infeasible
  void ComputeDuals();
  double ReducedCost(int var) const;
  Candidate Price() const;
  void Ftran(int var, std::vector<double>& out) const;
  void UpdateInverse(int leave_pos, const std::vector<double>& alpha);
  LpSolution Extract(LpStatus status) const;

  double lower(int v) const { return lower_[v]; }
  double upper(int v) const { return upper_[v]; }
  double* binv_col(int k) { return binv_.data() + static_cast<size_t>(k) * m_; }
  const double* binv_col(int k) const {
    return binv_.data() + static_cast<size_t>(k) * m_;
  }

  SimplexOptions options_;
  const LinearProgram* program_ = nullptr;

  int m_ = 0;
  int n_ = 0;
  bool has_basis_ = false;
  int basis_rows_ = 0;
  int basis_cols_ = 0;

  std::vector<double> lower_, upper_, cost_;
  std::vector<Status> status_;
  std::vector<double> x_;      // nonbasic values (basic entries are stale)
  std::vector<int> head_;      // basis position -> variable
  std::vector<int> position_;  // variable -> basis position or -1
  std::vector<double> xb_;     // basic values by position
  std::vector<double> binv_;   // column-major B^-1
  std::vector<double> phase_cost_;
  std::vector<double> duals_;
  bool phase_one_ = false;
  bool bland_ = false;
  double tol_primal_ = 1e-9;
  double tol_dual_ = 1e-9;
  int iterations_ = 0;
};

void SimplexSolver::Engine::LoadProgram(const LinearProgram& program) {
  program_ = &program;
  m_ = program.num_rows();
  n_ = program.num_cols();
  const int total = n_ + m_;
  lower_.assign(total, 0.0);
  upper_.assign(total, 0.0);
  cost_.assign(total, 0.0);
  double cost_scale = 0.0;
  double rhs_scale = 0.0;
  for (int j = 0; j < n_; ++j) {
    const auto& col = program.column(j);
    lower_[j] = col.lower;
    upper_[j] = col.upper;
    cost_[j] = col.cost;
    cost_scale = std::max(cost_scale, std::fabs(col.cost));
    if (std::isfinite(col.lower)) rhs_scale = std::max(rhs_scale, std::fabs(col.lower));
    if (std::isfinite(col.upper)) rhs_scale = std::max(rhs_scale, std::fabs(col.upper));
  }
  for (int i = 0; i < m_; ++i) {
    const auto& row = program.row(i);
    rhs_scale = std::max(rhs_scale, std::fabs(row.rhs));
    switch (row.sense) {
      case RowSense::kLessEqual:
        lower_[n_ + i] = 0.0;
        upper_[n_ + i] = kInfinity;
        break;
      case RowSense::kEqual:
        lower_[n_ + i] = 0.0;
        upper_[n_ + i] = 0.0;
        break;
      case RowSense::kGreaterEqual:
        lower_[n_ + i] = -kInfinity;
        upper_[n_ + i] = 0.0;
        break;
    }
  }
  tol_dual_ = options_.dual_tolerance * std::max(1.0, cost_scale * 1e-2);
  tol_primal_ = options_.primal_tolerance * std::max(1.0, rhs_scale * 1e-2);
}

void SimplexSolver::Engine::PlaceNonbasic(int v) {
  Status& s = status_[v];
  if (s == Status::kAtUpper && !std::isfinite(upper_[v])) s = Status::kAtLower;
  if (s == Status::kAtLower && !std::isfinite(lower_[v])) {
    s = std::isfinite(upper_[v]) ? Status::kAtUpper : Status::kFreeZero;
  }
  if (s == Status::kFreeZero && std::isfinite(lower_[v])) s = Status::kAtLower;
  switch (s) {
    case Status::kAtLower:
      x_[v] = lower_[v];
      break;
    case Status::kAtUpper:
      x_[v] = upper_[v];
      break;
    case Status::kFreeZero:
      x_[v] = 0.0;
      break;
    case Status::kBasic:
      break;
  }
}

void SimplexSolver::Engine::InitializeBasis() {
  const int total = n_ + m_;
  bool warm = has_basis_ && basis_rows_ == m_ && n_ >= basis_cols_;
  if (warm) {
    // Appended structurals enter nonbasic; logicals shift by the new column
    // count.
    std::vector<Status> old_status = status_;
    std::vector<int> old_head = head_;
    status_.assign(total, Status::kAtLower);
    for (int j = 0; j < basis_cols_; ++j) status_[j] = old_status[j];
    for (int i = 0; i < m_; ++i) status_[n_ + i] = old_status[basis_cols_ + i];
    for (int p = 0; p < m_; ++p) {
      int v = old_head[p];
      head_[p] = v >= basis_cols_ ? v - basis_cols_ + n_ : v;
    }
  } else {
    status_.assign(total, Status::kAtLower);
    head_.assign(m_, 0);
    for (int i = 0; i < m_; ++i) {
      head_[i] = n_ + i;
      status_[n_ + i] = Status::kBasic;
    }
  }
  position_.assign(total, -1);
  for (int p = 0; p < m_; ++p) position_[head_[p]] = p;
  x_.assign(total, 0.0);
  for (int v = 0; v < total; ++v) {
    if (status_[v] != Status::kBasic) PlaceNonbasic(v);
  }
  has_basis_ = true;
  basis_rows_ = m_;
  basis_cols_ = n_;
}

// Inverts the basis by eliminating only the structural block: logical basics
// are unit columns, so with R the rows not covered by a basic logical and S
// the basic structurals, B^-1 follows from the |S|x|S| matrix A[R, S].
// Dependent structurals are swapped for logicals of uncovered rows.
void SimplexSolver::Engine::Refactor() {
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<int> structural_pos;
    std::vector<char> covered(m_, 0);
    for (int p = 0; p < m_; ++p) {
      int v = head_[p];
      if (v >= n_) {
        covered[v - n_] = 1;
      } else {
        structural_pos.push_back(p);
      }
    }
    std::vector<int> free_rows;
    std::vector<int> row_index(m_, -1);
    for (int i = 0; i < m_; ++i) {
      if (!covered[i]) {
        row_index[i] = static_cast<int>(free_rows.size());
        free_rows.push_back(i);
      }
    }
    const int r = static_cast<int>(structural_pos.size());
    if (static_cast<int>(free_rows.size()) != r) {
      throw SolverError("basis bookkeeping mismatch");
    }
    // Augmented [M | I], row-major, rows = free_rows, columns = structurals.
    const int width = 2 * r;
    std::vector<double> aug(static_cast<size_t>(r) * width, 0.0);
    for (int t = 0; t < r; ++t) {
      const auto& col = program_->column(head_[structural_pos[t]]);
      for (const Entry& e : col.entries) {
        int ri = row_index[e.row];
        if (ri >= 0) aug[static_cast<size_t>(ri) * width + t] += e.value;
      }
    }
    for (int i = 0; i < r; ++i) aug[static_cast<size_t>(i) * width + r + i] = 1.0;

    std::vector<int> pivot_row_of_col(r, -1);
    std::vector<char> row_used(r, 0);
    std::vector<int> dependent;
    for (int t = 0; t < r; ++t) {
      int best = -1;
      double best_abs = 1e-11;
      for (int i = 0; i < r; ++i) {
        if (row_used[i]) continue;
        double v = std::fabs(aug[static_cast<size_t>(i) * width + t]);
        if (v > best_abs) {
          best_abs = v;
          best = i;
        }
      }
      if (best < 0) {
        dependent.push_back(t);
        continue;
      }
      row_used[best] = 1;
      pivot_row_of_col[t] = best;
      double* prow = aug.data() + static_cast<size_t>(best) * width;
      double inv = 1.0 / prow[t];
      for (int c = 0; c < width; ++c) prow[c] *= inv;
      for (int i = 0; i < r; ++i) {
        if (i == best) continue;
        double* row = aug.data() + static_cast<size_t>(i) * width;
        double factor = row[t];
        if (factor != 0.0) {
          simd::Axpy(-factor, std::span<const double>(prow, width),
                     std::span<double>(row, width));
        }
      }
    }
    if (!dependent.empty()) {
      std::vector<int> spare;
      for (int i = 0; i < r; ++i) {
        if (!row_used[i]) spare.push_back(free_rows[i]);
      }
      for (size_t idx = 0; idx < dependent.size(); ++idx) {
        int p = structural_pos[dependent[idx]];
        int leaving = head_[p];
        int logical = n_ + spare[idx];
        status_[leaving] = Status::kAtLower;
        position_[leaving] = -1;
        PlaceNonbasic(leaving);
        head_[p] = logical;
        position_[logical] = p;
        status_[logical] = Status::kBasic;
      }
      continue;
    }

    binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (covered[i]) binv_col(i)[position_[n_ + i]] = 1.0;
    }
    // Row t of M^-1 lives in aug row pivot_row_of_col[t], columns r..2r-1.
    for (int t = 0; t < r; ++t) {
      const double* inv_row =
          aug.data() + static_cast<size_t>(pivot_row_of_col[t]) * width + r;
      int p = structural_pos[t];
      for (int ri = 0; ri < r; ++ri) binv_col(free_rows[ri])[p] = inv_row[ri];
    }
    for (int t = 0; t < r; ++t) {
      const double* inv_row =
          aug.data() + static_cast<size_t>(pivot_row_of_col[t]) * width + r;
      const auto& col = program_->column(head_[structural_pos[t]]);
      for (const Entry& e : col.entries) {
        if (!covered[e.row] || e.value == 0.0) continue;
        int p_logical = position_[n_ + e.row];
        for (int ri = 0; ri < r; ++ri) {
          binv_col(free_rows[ri])[p_logical] -= e.value * inv_row[ri];
        }
      }
    }
    return;
  }
  throw SolverError("basis repair did not converge");
}

void SimplexSolver::Engine::ComputeBasicValues() {
  std::vector<double> residual(m_);
  for (int i = 0; i < m_; ++i) residual[i] = program_->row(i).rhs;
  for (int j = 0; j < n_; ++j) {
    if (status_[j] == Status::kBasic || x_[j] == 0.0) continue;
    for (const Entry& e : program_->column(j).entries) {
      residual[e.row] -= e.value * x_[j];
    }
  }
  for (int i = 0; i < m_; ++i) {
    int v = n_ + i;
    if (status_[v] != Status::kBasic) residual[i] -= x_[v];
  }
  xb_.assign(m_, 0.0);
  for (int k = 0; k < m_; ++k) {
    if (residual[k] != 0.0) {
      simd::Axpy(residual[k], std::span<const double>(binv_col(k), m_), xb_);
    }
  }
}

bool SimplexSolver::Engine::ComputePhaseCosts() {
  phase_cost_.assign(m_, 0.0);
  bool infeasible = false;
  for (int p = 0; p < m_; ++p) {
    int v = head_[p];
    if (xb_[p] < lower_[v] - tol_primal_) {
      phase_cost_[p] = -1.0;
      infeasible = true;
    } else if (xb_[p] > upper_[v] + tol_primal_) {
      phase_cost_[p] = 1.0;
      infeasible = true;
    }
  }
  if (!infeasible) {
    for (int p = 0; p < m_; ++p) phase_cost_[p] = cost_[head_[p]];
  }
  return infeasible;
}

void SimplexSolver::Engine::ComputeDuals() {
  duals_.assign(m_, 0.0);
  for (int k = 0; k < m_; ++k) {
    duals_[k] = simd::Dot(phase_cost_, std::span<const double>(binv_col(k), m_));
  }
}

double SimplexSolver::Engine::ReducedCost(int v) const {
  if (v >= n_) return -duals_[v - n_];
  double d = phase_one_ ? 0.0 : cost_[v];
  for (const Entry& e : program_->column(v).entries) d -= duals_[e.row] * e.value;
  return d;
}

SimplexSolver::Engine::Candidate SimplexSolver::Engine::Price() const {
  Candidate best;
  double best_score = 0.0;
  const int total = n_ + m_;
  for (int v = 0; v < total; ++v) {
    Status s = status_[v];
    if (s == Status::kBasic) continue;
    if (lower_[v] == upper_[v]) continue;
    double d = ReducedCost(v);
    bool eligible = (s == Status::kAtLower && d < -tol_dual_) ||
                    (s == Status::kAtUpper && d > tol_dual_) ||
                    (s == Status::kFreeZero && std::fabs(d) > tol_dual_);
    if (!eligible) continue;
    if (bland_) return Candidate{v, d};
    if (std::fabs(d) > best_score) {
      best_score = std::fabs(d);
      best = Candidate{v, d};
    }
  }
  return best;
}

void SimplexSolver::Engine::Ftran(int v, std::vector<double>& out) const {
  out.assign(m_, 0.0);
  if (v >= n_) {
    const double* col = binv_col(v - n_);
    std::copy(col, col + m_, out.begin());
    return;
  }
  for (const Entry& e : program_->column(v).entries) {
    if (e.value != 0.0) {
      simd::Axpy(e.value, std::span<const double>(binv_col(e.row), m_), out);
    }
  }
}

void SimplexSolver::Engine::UpdateInverse(int r, const std::vector<double>& alpha) {
  const double pivot = alpha[r];
  for (int k = 0; k < m_; ++k) {
    double* col = binv_col(k);
    double factor = col[r] / pivot;
    if (factor == 0.0) continue;
    simd::Axpy(-factor, alpha, std::span<double>(col, m_));
    col[r] = factor;
  }
}

LpSolution SimplexSolver::Engine::Extract(LpStatus status) const {
  LpSolution sol;
  sol.status = status;
  sol.iterations = iterations_;
  sol.primal.assign(n_, 0.0);
  for (int j = 0; j < n_; ++j) {
    sol.primal[j] = status_[j] == Status::kBasic ? xb_[position_[j]] : x_[j];
  }
  sol.row_activity.assign(m_, 0.0);
  sol.objective = 0.0;
  for (int j = 0; j < n_; ++j) {
    double v = sol.primal[j];
    if (v == 0.0) continue;
    sol.objective += cost_[j] * v;
    for (const Entry& e : program_->column(j).entries) {
      sol.row_activity[e.row] += e.value * v;
    }
  }
  sol.duals = duals_;
  sol.reduced_costs.assign(n_, 0.0);
  for (int j = 0; j < n_; ++j) {
    double d = (status == LpStatus::kInfeasible) ? 0.0 : cost_[j];
    for (const Entry& e : program_->column(j).entries) d -= duals_[e.row] * e.value;
    sol.reduced_costs[j] = d;
  }
  return sol;
}

LpSolution SimplexSolver::Engine::Solve(const LinearProgram& program) {
  LoadProgram(program);
  iterations_ = 0;
  bland_ = false;
  if (m_ == 0) {
    // Only bounds: each column sits at its cheapest bound.
    status_.assign(n_, Status::kAtLower);
    x_.assign(n_, 0.0);
    position_.assign(n_, -1);
    head_.clear();
    xb_.clear();
    duals_.clear();
    for (int j = 0; j < n_; ++j) {
      if (cost_[j] < 0.0) {
        if (!std::isfinite(upper_[j])) return Extract(LpStatus::kUnbounded);
        status_[j] = Status::kAtUpper;
      } else if (cost_[j] > 0.0 && !std::isfinite(lower_[j])) {
        return Extract(LpStatus::kUnbounded);
      }
      PlaceNonbasic(j);
    }
    has_basis_ = false;
    return Extract(LpStatus::kOptimal);
  }
  InitializeBasis();
  Refactor();
  ComputeBasicValues();

  const int max_iterations =
      options_.max_iterations > 0 ? options_.max_iterations
                                  : std::max(100000, 50 * (m_ + n_));
  int since_refactor = 0;
  int degenerate_run = 0;
  std::vector<double> alpha;

  while (true) {
    if (iterations_ >= max_iterations) {
      throw SolverError("simplex iteration limit reached (" +
                        std::to_string(max_iterations) + ")");
    }
    phase_one_ = ComputePhaseCosts();
    ComputeDuals();
    Candidate entering = Price();
    if (entering.var < 0) {
      if (since_refactor > 0) {
        // Confirm on a fresh factorization before declaring termination.
        Refactor();
        ComputeBasicValues();
        since_refactor = 0;
        continue;
      }
      return Extract(phase_one_ ? LpStatus::kInfeasible : LpStatus::kOptimal);
    }

    const int q = entering.var;
    const double dir = entering.reduced_cost < 0.0 ? 1.0 : -1.0;
    Ftran(q, alpha);

    // Harris two-pass ratio test; exact minimum ratio under Bland's rule.
    auto limit_for = [&](int p, double slack_tol, int* leave_status) -> double {
      double a = alpha[p];
      if (std::fabs(a) <= options_.pivot_tolerance) return kInfinity;
      int v = head_[p];
      double rate = -dir * a;
      double value = xb_[p];
      if (rate < 0.0) {
        if (phase_one_ && value > upper_[v] + tol_primal_) {
          *leave_status = 1;
          return std::max(0.0, (value - upper_[v] + slack_tol) / -rate);
        }
        if (phase_one_ && value < lower_[v] - tol_primal_) return kInfinity;
        if (!std::isfinite(lower_[v])) return kInfinity;
        *leave_status = 0;
        return std::max(0.0, (value - lower_[v] + slack_tol) / -rate);
      }
      if (phase_one_ && value < lower_[v] - tol_primal_) {
        *leave_status = 0;
        return std::max(0.0, (lower_[v] - value + slack_tol) / rate);
      }
      if (phase_one_ && value > upper_[v] + tol_primal_) return kInfinity;
      if (!std::isfinite(upper_[v])) return kInfinity;
      *leave_status = 1;
      return std::max(0.0, (upper_[v] - value + slack_tol) / rate);
    };

    int leave_pos = -1;
    int leave_to_upper = 0;
    double theta = kInfinity;
    if (bland_) {
      int best_var = -1;
      for (int p = 0; p < m_; ++p) {
        int status = 0;
        double lim = limit_for(p, 0.0, &status);
        if (lim == kInfinity) continue;
        if (lim < theta - 1e-12 ||
            (lim <= theta + 1e-12 && head_[p] < best_var)) {
          theta = lim;
          leave_pos = p;
          leave_to_upper = status;
          best_var = head_[p];
        }
      }
    } else {
      double bound = kInfinity;
      for (int p = 0; p < m_; ++p) {
        int status = 0;
        bound = std::min(bound, limit_for(p, tol_primal_, &status));
      }
      if (bound < kInfinity) {
        double best_alpha = 0.0;
        for (int p = 0; p < m_; ++p) {
          int status = 0;
          double lim = limit_for(p, 0.0, &status);
          if (lim <= bound && std::fabs(alpha[p]) > best_alpha) {
            best_alpha = std::fabs(alpha[p]);
            theta = lim;
            leave_pos = p;
            leave_to_upper = status;
          }
        }
      }
    }

    double flip = upper_[q] - lower_[q];
    bool bound_flip = std::isfinite(flip) && flip <= theta;
    if (!bound_flip && leave_pos < 0) {
      if (phase_one_) throw SolverError("unbounded phase-one direction");
      return Extract(LpStatus::kUnbounded);
    }
    if (bound_flip) theta = flip;

    ++iterations_;
    if (theta <= 1e-12) {
      if (++degenerate_run > options_.degenerate_limit) bland_ = true;
    } else {
      degenerate_run = 0;
      bland_ = false;
    }

    double entering_value = x_[q] + dir * theta;
    if (theta != 0.0) simd::Axpy(-dir * theta, alpha, xb_);
    if (bound_flip) {
      status_[q] = dir > 0 ? Status::kAtUpper : Status::kAtLower;
      PlaceNonbasic(q);
      continue;
    }

    int leaving = head_[leave_pos];
    status_[leaving] = leave_to_upper ? Status::kAtUpper : Status::kAtLower;
    position_[leaving] = -1;
    PlaceNonbasic(leaving);

    head_[leave_pos] = q;
    position_[q] = leave_pos;
    status_[q] = Status::kBasic;
    xb_[leave_pos] = entering_value;
    UpdateInverse(leave_pos, alpha);

    if (++since_refactor >= options_.refactor_interval) {
      Refactor();
      ComputeBasicValues();
      since_refactor = 0;
    }
  }
}

SimplexSolver::SimplexSolver(SimplexOptions options)
    : options_(options), engine_(std::make_unique<Engine>(options)) {}

SimplexSolver::~SimplexSolver() = default;

LpSolution SimplexSolver::Solve(const LinearProgram& program) {
  return engine_->Solve(program);
}

void SimplexSolver::Reset() { engine_->Reset(); }

}  // namespace lp
}  // namespace cmcf
