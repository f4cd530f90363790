#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "cmcf/errors.h"
#include "cmcf/lp.h"

namespace cmcf {
namespace lp {

int LinearProgram::AddRow(RowSense sense, double rhs, std::string name) {
  rows_.push_back(Row{sense, rhs, std::move(name)});
  return num_rows() - 1;
}

int LinearProgram::AddColumn(double cost, double lower, double upper,
                             std::span<const Entry> entries,
                             std::string name) {
  if (lower > upper) throw std::invalid_argument("column lower > upper");
  for (const Entry& e : entries) {
    if (e.row < 0 || e.row >= num_rows()) {
      throw std::out_of_range("column entry references unknown row " +
                              std::to_string(e.row));
    }
  }
  Column col;
  col.cost = cost;
  col.lower = lower;
  col.upper = upper;
  col.entries.assign(entries.begin(), entries.end());
  col.name = std::move(name);
  cols_.push_back(std::move(col));
  return num_cols() - 1;
}

void LinearProgram::SetColumnBounds(int col, double lower, double upper) {
  if (lower > upper) throw std::invalid_argument("column lower > upper");
  cols_.at(col).lower = lower;
  cols_.at(col).upper = upper;
}

void LinearProgram::SetColumnCost(int col, double cost) {
  cols_.at(col).cost = cost;
}

std::string LinearProgram::DebugString() const {
  std::ostringstream out;
  out.precision(17);
  auto var = [this](int j) {
    return cols_[j].name.empty() ? "x" + std::to_string(j) : cols_[j].name;
  };
  out << "minimize";
  for (int j = 0; j < num_cols(); ++j) {
    if (cols_[j].cost != 0.0) out << " + " << cols_[j].cost << " " << var(j);
  }
  out << "\n";
  std::vector<std::vector<std::pair<int, double>>> by_row(rows_.size());
  for (int j = 0; j < num_cols(); ++j) {
    for (const Entry& e : cols_[j].entries) by_row[e.row].emplace_back(j, e.value);
  }
  for (int i = 0; i < num_rows(); ++i) {
    out << (rows_[i].name.empty() ? "r" + std::to_string(i) : rows_[i].name)
        << ":";
    for (auto [j, v] : by_row[i]) out << " + " << v << " " << var(j);
    switch (rows_[i].sense) {
      case RowSense::kLessEqual:
        out << " <= ";
        break;
      case RowSense::kEqual:
        out << " = ";
        break;
      case RowSense::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << rows_[i].rhs << "\n";
  }
  out << "bounds\n";
  for (int j = 0; j < num_cols(); ++j) {
    out << cols_[j].lower << " <= " << var(j) << " <= " << cols_[j].upper
        << "\n";
  }
  return out.str();
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

std::unique_ptr<LpBackend> MakeBackend(std::string_view name) {
  if (name.empty() || name == "builtin") {
    return std::make_unique<SimplexSolver>();
  }
  throw ConfigError("unknown LP backend '" + std::string(name) +
                    "' (only 'builtin' is available)");
}

std::unique_ptr<LpBackend> MakeDefaultBackend() {
  const char* env = std::getenv("CMCF_LP_BACKEND");
  return MakeBackend(env == nullptr ? std::string_view() : std::string_view(env));
}

}  // namespace lp
}  // namespace cmcf
