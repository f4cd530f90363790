#include "cmcf/scaling.h"

#include <cmath>
#include <string>

#include "cmcf/errors.h"
#include "cmcf/lp.h"

namespace cmcf {
namespace {

constexpr double kMaxFactor = 1048576.0;  // 2^20

double AcceptanceTolerance(const Instance& inst) {
  double total = 0.0;
  for (const Commodity& c : inst.commodities()) total += c.bandwidth;
  return 1e-7 * std::max(1.0, total);
}

}  // namespace

double MaxAcceptance(const Instance& inst) {
  const Network& net = inst.network();
  const int V = net.num_nodes();
  const int A = net.num_arcs();
  const int K = inst.num_commodities();
  lp::LinearProgram prog;
  std::vector<int> capacity_row(A);
  for (int a = 0; a < A; ++a) {
    capacity_row[a] =
        prog.AddRow(lp::RowSense::kLessEqual, net.arc(a).capacity, "cap_" + std::to_string(a));
  }
  std::vector<int> flow_row(static_cast<size_t>(V) * K);
  for (int k = 0; k < K; ++k) {
    const Commodity& c = inst.commodity(k);
    for (int v = 0; v < V; ++v) {
      double rhs = v == c.source ? 1.0 : v == c.target ? -1.0 : 0.0;
      flow_row[k * V + v] = prog.AddRow(lp::RowSense::kEqual, rhs);
    }
  }
  std::vector<lp::Entry> entries;
  for (int k = 0; k < K; ++k) {
    const Commodity& c = inst.commodity(k);
    for (int a = 0; a < A; ++a) {
      const Arc& arc = net.arc(a);
      entries = {{flow_row[k * V + arc.tail], 1.0},
                 {flow_row[k * V + arc.head], -1.0},
                 {capacity_row[a], c.bandwidth}};
      prog.AddColumn(0.0, 0.0, 1.0, entries);
    }
    entries = {{flow_row[k * V + c.source], 1.0}, {flow_row[k * V + c.target], -1.0}};
    prog.AddColumn(c.bandwidth, 0.0, 1.0, entries, "y_" + std::to_string(k));
  }
  lp::LpSolution sol = lp::MakeDefaultBackend()->Solve(prog);
  if (sol.status != lp::LpStatus::kOptimal) {
    throw SolverError(std::string("acceptance LP ended ") + lp::LpStatusName(sol.status));
  }
  return std::max(0.0, sol.objective);
}

Instance ScaleCapacities(const Instance& inst, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ScalingError("scaling factor must be positive and finite");
  }
  const Network& src = inst.network();
  Network net;
  for (int v = 0; v < src.num_nodes(); ++v) net.AddNode(src.node_name(v));
  for (const Arc& arc : src.arcs()) {
    const CostFunction& r = arc.cost;
    CostFunction scaled = r;
    switch (r.kind()) {
      case CostKind::kLinear:
        scaled = CostFunction::Linear(r.f() / factor);
        break;
      case CostKind::kQuadratic:
        scaled = CostFunction::Quadratic(r.f() / (factor * factor));
        break;
      case CostKind::kKleinrock:
        scaled = CostFunction::Kleinrock(r.f() * factor, r.d() * factor);
        break;
      case CostKind::kBlackBox:
        scaled = CostFunction::BlackBox(
            [r, factor](double x) { return r.Evaluate(x / factor); }, r.convex(),
            nullptr, r.label());
        break;
    }
    net.AddArc(arc.tail, arc.head, arc.capacity * factor, scaled);
  }
  std::vector<Commodity> commodities(inst.commodities().begin(), inst.commodities().end());
  return Instance(std::move(net), std::move(commodities));
}

std::pair<Instance, ScalingReport> ScaleToCongestion(const Instance& inst) {
  if (inst.num_commodities() == 0) throw ScalingError("instance has no demands");
  ScalingReport report;
  report.tolerance = AcceptanceTolerance(inst);
  auto probe = [&](double factor) {
    double u = MaxAcceptance(ScaleCapacities(inst, factor));
    bool ok = u <= report.tolerance;
    report.steps.push_back({factor, ok, u});
    return ok;
  };
  double lo, hi;
  if (probe(1.0)) {
    hi = 1.0;
    lo = 0.5;
    while (probe(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1.0 / kMaxFactor) throw ScalingError("instance is feasible at every factor");
    }
  } else {
    lo = 1.0;
    hi = 2.0;
    while (!probe(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > kMaxFactor) {
        throw ScalingError("no capacity factor up to 2^20 accepts every demand");
      }
    }
  }
  // Invariant: hi feasible, lo infeasible.
  while (hi / lo > 1.01) {
    double mid = std::sqrt(lo * hi);
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  report.tau = hi;
  report.multiplier = hi * 1.05;
  return {ScaleCapacities(inst, report.multiplier), std::move(report)};
}

}  // namespace cmcf
