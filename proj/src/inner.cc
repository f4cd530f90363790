#include "cmcf/inner.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmcf/one_dim.h"
#include "path_master.h"

namespace cmcf {
namespace {

constexpr int kGoldenIterations = 200;
constexpr int kGridPoints = 256;

double Clip(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

bool AtLeast(double value, double threshold) {
  return value >= threshold - 1e-12 * std::max(1.0, std::fabs(threshold));
}

}  // namespace

VertexCandidate MaximizeVertexGain(const CostFunction& r, double beta,
                                   double lo, double hi, VertexSearch method) {
  hi = std::max(hi, lo);
  VertexCandidate out;
  bool closed = method == VertexSearch::kAuto;
  switch (closed ? r.kind() : CostKind::kBlackBox) {
    case CostKind::kLinear:
      out.c = beta > r.f() ? hi : lo;
      break;
    case CostKind::kQuadratic:
      out.c = Clip(beta > 0.0 ? beta / (2.0 * r.f()) : 0.0, lo, hi);
      break;
    case CostKind::kKleinrock:
      out.c = beta > 0.0 ? Clip(r.d() - std::sqrt(r.f() / beta), lo, hi) : lo;
      break;
    case CostKind::kBlackBox: {
      auto h = [&](double c) { return beta * c - r.Evaluate(c); };
      double tol = 1e-9 * std::fabs(hi);
      OneDimResult best;
      if (r.convex()) {
        best = GoldenSectionMaximize(h, lo, hi, kGoldenIterations, tol);
      } else {
        best = GridGoldenMaximize(h, lo, hi, kGridPoints, kGoldenIterations, tol);
        out.used_grid = true;
      }
      out.c = best.x;
      break;
    }
  }
  out.gain = beta * out.c - r.Evaluate(out.c);
  return out;
}

VertexCandidate MaximizeTightVertexGain(const CostFunction& r, double capacity,
                                        std::span<const double> thresholds,
                                        std::span<const double> betas,
                                        VertexSearch method) {
  const int T = static_cast<int>(thresholds.size());
  auto true_beta = [&](double c) {
    double b = 0.0;
    for (int j = 0; j < T; ++j) {
      if (AtLeast(c, thresholds[j])) b += betas[j];
    }
    return b;
  };
  VertexCandidate best;
  bool have = false;
  double prefix = 0.0;
  for (int j = 0; j < T; ++j) {
    prefix += betas[j];
    double lo = thresholds[j];
    if (lo > capacity) break;
    double hi = j + 1 < T ? std::min(thresholds[j + 1], capacity) : capacity;
    VertexCandidate cand = MaximizeVertexGain(r, prefix, lo, hi, method);
    cand.gain = true_beta(cand.c) * cand.c - r.Evaluate(cand.c);
    if (!have || cand.gain > best.gain) {
      bool grid = best.used_grid || cand.used_grid;
      best = cand;
      best.used_grid = grid;
      have = true;
    }
  }
  return best;
}

std::vector<double> DefaultThresholds(const Instance& inst) {
  std::vector<double> t{0.0};
  for (const Commodity& c : inst.commodities()) t.push_back(c.bandwidth);
  std::sort(t.begin(), t.end());
  std::vector<double> out;
  for (double v : t) {
    if (!out.empty() &&
        std::fabs(v - out.back()) <= 1e-12 * std::max(1.0, std::fabs(v))) {
      continue;
    }
    out.push_back(v);
  }
  return out;
}

namespace {

class InnerMaster : public internal::PathMaster {
 public:
  InnerMaster(const Instance& inst, InnerMode mode, std::vector<double> thresholds)
      : PathMaster(inst, mode == InnerMode::kTight), mode_(mode) {
    if (mode == InnerMode::kInner) {
      thresholds_ = {0.0};
    } else {
      thresholds_ = thresholds.empty() ? DefaultThresholds(inst) : std::move(thresholds);
      if (thresholds_.front() != 0.0) thresholds_.insert(thresholds_.begin(), 0.0);
    }
    const int A = inst.num_arcs();
    const int T = static_cast<int>(thresholds_.size());
    load_row_.resize(static_cast<size_t>(A) * T);
    convexity_row_.resize(A);
    for (int a = 0; a < A; ++a) {
      for (int j = 0; j < T; ++j) {
        load_row_[a * T + j] = lp_.AddRow(
            lp::RowSense::kLessEqual, 0.0,
            "load_" + std::to_string(a) + (T > 1 ? "_" + std::to_string(j) : ""));
      }
    }
    for (int a = 0; a < A; ++a) {
      convexity_row_[a] =
          lp_.AddRow(lp::RowSense::kEqual, 1.0, "convex_" + std::to_string(a));
    }
    AddCommodityRows();
    vertices_.resize(A);
    for (int a = 0; a < A; ++a) {
      AddVertex(a, 0.0);
      AddVertex(a, inst.network().arc(a).capacity);
    }
  }

  std::string_view name() const override {
    return mode_ == InnerMode::kInner ? "inner" : "tight-inner";
  }

 protected:
  void PathEntries(int k, const std::vector<int>& arcs,
                   std::vector<lp::Entry>& out) const override {
    const double b = inst_.commodity(k).bandwidth;
    const int T = static_cast<int>(thresholds_.size());
    for (int a : arcs) {
      for (int j = 0; j < T; ++j) {
        if (AtLeast(b, thresholds_[j])) out.push_back({load_row_[a * T + j], b});
      }
    }
  }

  void PathWeights(int k, const std::vector<double>& lambda,
                   std::vector<double>& weights) const override {
    const double b = inst_.commodity(k).bandwidth;
    const int T = static_cast<int>(thresholds_.size());
    weights.assign(inst_.num_arcs(), 0.0);
    for (int a = 0; a < inst_.num_arcs(); ++a) {
      double w = 0.0;
      for (int j = 0; j < T; ++j) {
        if (AtLeast(b, thresholds_[j])) w += lambda[load_row_[a * T + j]];
      }
      weights[a] = b * w;
    }
  }

  int PriceArcColumns(const std::vector<double>& lambda, bool farkas,
                      double tolerance, ColGenStats& stats) override {
    // With zero costs the best vertex is c_a, which is always present.
    if (farkas) return 0;
    const int T = static_cast<int>(thresholds_.size());
    std::vector<double> betas(T);
    int added = 0;
    for (int a = 0; a < inst_.num_arcs(); ++a) {
      const Arc& arc = inst_.network().arc(a);
      for (int j = 0; j < T; ++j) betas[j] = lambda[load_row_[a * T + j]];
      double gamma = lambda[convexity_row_[a]];
      VertexCandidate cand =
          T == 1 ? MaximizeVertexGain(arc.cost, betas[0], 0.0, arc.capacity)
                 : MaximizeTightVertexGain(arc.cost, arc.capacity, thresholds_,
                                           betas);
      if (cand.used_grid) ++stats.grid_searches;
      if (cand.gain <= gamma + tolerance * (1.0 + std::fabs(gamma))) continue;
      if (AddVertex(a, cand.c)) ++added;
    }
    return added;
  }

  void CollectArcResults(const lp::LpSolution& sol,
                         RelaxationResult& result) const override {
    result.arc_costs.assign(inst_.num_arcs(), 0.0);
    for (int a = 0; a < inst_.num_arcs(); ++a) {
      for (const Vertex& v : vertices_[a]) {
        double z = sol.primal[v.col];
        result.arc_costs[a] += z * v.cost;
        if (z > 1e-9) result.arc_columns.push_back({a, v.c, {}, z});
      }
    }
  }

 private:
  struct Vertex {
    double c = 0.0;
    double cost = 0.0;
    int col = 0;
  };

  bool AddVertex(int a, double c) {
    const double cap = inst_.network().arc(a).capacity;
    for (const Vertex& v : vertices_[a]) {
      if (std::fabs(v.c - c) <= 1e-9 * cap) return false;
    }
    const int T = static_cast<int>(thresholds_.size());
    std::vector<lp::Entry> entries;
    if (c > 0.0) {
      for (int j = 0; j < T; ++j) {
        if (AtLeast(c, thresholds_[j])) entries.push_back({load_row_[a * T + j], -c});
      }
    }
    entries.push_back({convexity_row_[a], 1.0});
    double cost = inst_.network().arc(a).cost.Evaluate(c);
    int col = lp_.AddColumn(cost, 0.0, lp::kInfinity, entries,
                            "z_" + std::to_string(a) + "_" +
                                std::to_string(vertices_[a].size()));
    vertices_[a].push_back({c, cost, col});
    return true;
  }

  InnerMode mode_;
  std::vector<double> thresholds_;
  std::vector<int> load_row_;
  std::vector<int> convexity_row_;
  std::vector<std::vector<Vertex>> vertices_;
};

}  // namespace

std::unique_ptr<Relaxation> MakeInnerRelaxation(const Instance& inst,
                                                InnerMode mode,
                                                std::vector<double> thresholds) {
  return std::make_unique<InnerMaster>(inst, mode, std::move(thresholds));
}

}  // namespace cmcf
