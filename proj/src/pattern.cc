#include "cmcf/pattern.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "cmcf/errors.h"
#include "cmcf/simd/kernels.h"
#include "path_master.h"

namespace cmcf {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long kMaxStates = 200'000'000;

}  // namespace

BandwidthScale ScaleBandwidths(std::span<const double> bandwidths) {
  BandwidthScale out;
  for (double scale = 1.0; scale <= 1e6; scale *= 10.0) {
    bool integral = true;
    for (double b : bandwidths) {
      double v = b * scale;
      if (std::fabs(v - std::round(v)) > 1e-9 * std::max(1.0, std::fabs(v))) {
        integral = false;
        break;
      }
    }
    if (integral) {
      out.scale = scale;
      break;
    }
    if (scale == 1e6) {
      out.scale = scale;
      out.rounded = true;
    }
  }
  for (double b : bandwidths) out.weights.push_back(std::lround(b * out.scale));
  return out;
}

KnapsackChoice SolveNonlinearKnapsack(std::span<const KnapsackItem> items,
                                      long capacity,
                                      const std::function<double(long)>& cost) {
  long total = 0;
  std::vector<KnapsackItem> usable;
  for (const KnapsackItem& it : items) {
    if (it.weight > capacity) continue;
    usable.push_back(it);
    total += it.weight;
  }
  const long W = std::min(capacity, total);
  const size_t width = static_cast<size_t>(W) + 1;
  const size_t n = usable.size();
  if (static_cast<double>(width) * (n + 1) > kMaxStates) {
    throw ConfigError("pattern knapsack table too large (" +
                      std::to_string(width) + " x " + std::to_string(n) + ")");
  }
  std::vector<double> best(width, kNegInf), next(width);
  best[0] = 0.0;
  std::vector<char> taken(width * n, 0);
  for (size_t i = 0; i < n; ++i) {
    const long w = usable[i].weight;
    std::copy(best.begin(), best.begin() + std::min<long>(w, W + 1), next.begin());
    if (w <= W) {
      const size_t len = width - static_cast<size_t>(w);
      simd::MaxPlus(std::span<const double>(best.data() + w, len),
                    std::span<const double>(best.data(), len), usable[i].profit,
                    std::span<double>(next.data() + w, len));
      char* row = taken.data() + i * width;
      for (size_t x = static_cast<size_t>(w); x < width; ++x) {
        row[x] = next[x] != best[x];
      }
    }
    best.swap(next);
  }
  KnapsackChoice choice;
  choice.states = static_cast<long>(width * (n + 1));
  long arg = -1;
  for (long w = 0; w <= W; ++w) {
    if (best[w] == kNegInf) continue;
    double score = best[w] - cost(w);
    if (arg < 0 || score > choice.score) {
      choice.score = score;
      arg = w;
    }
  }
  choice.weight = arg;
  long at = arg;
  for (size_t i = n; i-- > 0;) {
    if (taken[i * width + at]) {
      choice.ids.push_back(usable[i].id);
      at -= usable[i].weight;
    }
  }
  std::sort(choice.ids.begin(), choice.ids.end());
  return choice;
}

namespace {

class PatternMaster : public internal::PathMaster {
 public:
  explicit PatternMaster(const Instance& inst) : PathMaster(inst, true) {
    const int A = inst.num_arcs();
    const int K = inst.num_commodities();
    std::vector<double> bw;
    for (const Commodity& c : inst.commodities()) bw.push_back(c.bandwidth);
    scale_ = ScaleBandwidths(bw);
    link_row_.assign(static_cast<size_t>(A) * K, -1);
    for (int a = 0; a < A; ++a) {
      const double cap = inst.network().arc(a).capacity;
      for (int k = 0; k < K; ++k) {
        if (inst.commodity(k).bandwidth > cap * (1.0 + 1e-12)) continue;
        link_row_[a * K + k] = lp_.AddRow(
            lp::RowSense::kLessEqual, 0.0,
            "link_" + std::to_string(a) + "_" + std::to_string(k));
      }
    }
    convexity_row_.resize(A);
    for (int a = 0; a < A; ++a) {
      convexity_row_[a] =
          lp_.AddRow(lp::RowSense::kEqual, 1.0, "convex_" + std::to_string(a));
    }
    AddCommodityRows();
    patterns_.resize(A);
    for (int a = 0; a < A; ++a) AddPattern(a, {});
  }

  std::string_view name() const override { return "pattern"; }

 protected:
  void PathEntries(int k, const std::vector<int>& arcs,
                   std::vector<lp::Entry>& out) const override {
    const int K = inst_.num_commodities();
    for (int a : arcs) {
      int row = link_row_[a * K + k];
      if (row < 0) {
        throw ConfigError("path crosses arc " + std::to_string(a) +
                          " whose capacity is below the bandwidth");
      }
      out.push_back({row, 1.0});
    }
  }

  void PathWeights(int k, const std::vector<double>& lambda,
                   std::vector<double>& weights) const override {
    const int K = inst_.num_commodities();
    weights.assign(inst_.num_arcs(), 0.0);
    for (int a = 0; a < inst_.num_arcs(); ++a) {
      int row = link_row_[a * K + k];
      if (row >= 0) weights[a] = lambda[row];
    }
  }

  void ApplyArcRestrictions(const Restrictions&) override {
    for (int a = 0; a < inst_.num_arcs(); ++a) {
      for (const PatternColumn& p : patterns_[a]) {
        bool active = true;
        for (int k : p.members) {
          if (!admissible_[k][a]) active = false;
        }
        lp_.SetColumnBounds(p.col, 0.0, active ? lp::kInfinity : 0.0);
      }
    }
  }

  int PriceArcColumns(const std::vector<double>& lambda, bool farkas,
                      double tolerance, ColGenStats& stats) override {
    const int K = inst_.num_commodities();
    stats.bandwidth_scale = scale_.scale;
    stats.bandwidth_rounded = scale_.rounded;
    int added = 0;
    std::vector<KnapsackItem> items;
    for (int a = 0; a < inst_.num_arcs(); ++a) {
      const Arc& arc = inst_.network().arc(a);
      items.clear();
      for (int k = 0; k < K; ++k) {
        int row = link_row_[a * K + k];
        if (row < 0 || !admissible_[k][a]) continue;
        double profit = lambda[row];
        if (profit <= 0.0) continue;
        items.push_back({k, scale_.weights[k], profit});
      }
      long cap = static_cast<long>(std::floor(arc.capacity * scale_.scale + 1e-9));
      auto cost = [&](long w) {
        return farkas ? 0.0 : arc.cost.Evaluate(std::min(arc.capacity, w / scale_.scale));
      };
      KnapsackChoice choice = SolveNonlinearKnapsack(items, cap, cost);
      stats.max_dp_states = std::max(stats.max_dp_states, choice.states);
      double total = 0.0, profit = 0.0;
      for (int k : choice.ids) {
        total += inst_.commodity(k).bandwidth;
        profit += lambda[link_row_[a * K + k]];
      }
      if (total > arc.capacity * (1.0 + 1e-12)) continue;
      double value = profit - (farkas ? 0.0 : arc.cost.Evaluate(total));
      double gamma = lambda[convexity_row_[a]];
      if (value <= gamma + tolerance * (1.0 + std::fabs(gamma))) continue;
      if (AddPattern(a, choice.ids)) ++added;
    }
    return added;
  }

  void CollectArcResults(const lp::LpSolution& sol,
                         RelaxationResult& result) const override {
    result.arc_costs.assign(inst_.num_arcs(), 0.0);
    for (int a = 0; a < inst_.num_arcs(); ++a) {
      for (const PatternColumn& p : patterns_[a]) {
        double u = sol.primal[p.col];
        result.arc_costs[a] += u * p.cost;
        if (u > 1e-9) result.arc_columns.push_back({a, p.total, p.members, u});
      }
    }
  }

 private:
  struct PatternColumn {
    std::vector<int> members;
    double total = 0.0;
    double cost = 0.0;
    int col = 0;
  };

  bool AddPattern(int a, const std::vector<int>& members) {
    if (!seen_.insert({a, members}).second) return false;
    const int K = inst_.num_commodities();
    std::vector<lp::Entry> entries;
    double total = 0.0;
    for (int k : members) {
      entries.push_back({link_row_[a * K + k], -1.0});
      total += inst_.commodity(k).bandwidth;
    }
    entries.push_back({convexity_row_[a], 1.0});
    double cost = inst_.network().arc(a).cost.Evaluate(total);
    int col = lp_.AddColumn(cost, 0.0, lp::kInfinity, entries,
                            "u_" + std::to_string(a) + "_" +
                                std::to_string(patterns_[a].size()));
    patterns_[a].push_back({members, total, cost, col});
    return true;
  }

  BandwidthScale scale_;
  std::vector<int> link_row_;
  std::vector<int> convexity_row_;
  std::vector<std::vector<PatternColumn>> patterns_;
  std::set<std::pair<int, std::vector<int>>> seen_;
};

}  // namespace

std::unique_ptr<Relaxation> MakePatternRelaxation(const Instance& inst) {
  return std::make_unique<PatternMaster>(inst);
}

}  // namespace cmcf
