#include "cmcf/branching.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cmcf {
namespace {

bool Strict(double v, double tol) { return v > tol && v < 1.0 - tol; }

}  // namespace

bool IsFractional(const CommodityFlow& flow, double tol) {
  if (Strict(flow.rejected, tol)) return true;
  for (const PathFlow& p : flow.paths) {
    if (Strict(p.ratio, tol)) return true;
  }
  return false;
}

int SelectBranchingCommodity(const Instance& inst, const FlowSolution& sol,
                             double tol) {
  int best = -1;
  for (int k = 0; k < static_cast<int>(sol.commodities.size()); ++k) {
    if (!IsFractional(sol.commodities[k], tol)) continue;
    if (best < 0 ||
        inst.commodity(k).bandwidth > inst.commodity(best).bandwidth) {
      best = k;
    }
  }
  return best;
}

Divergence FindDivergence(const Network& network, int source,
                          const std::vector<std::vector<int>>& paths) {
  if (paths.size() < 2) throw std::logic_error("divergence needs two paths");
  Divergence out;
  out.node = source;
  for (size_t i = 0;; ++i) {
    bool same = true;
    for (const auto& p : paths) {
      if (i >= p.size() || p[i] != paths[0][i]) {
        same = false;
        break;
      }
    }
    if (!same) break;
    out.common.push_back(paths[0][i]);
    out.node = network.arc(paths[0][i]).head;
  }
  return out;
}

std::vector<BranchChild> Branch(const Instance& inst,
                                const Restrictions& parent, int k,
                                const CommodityFlow& flow, double tol) {
  if (!IsFractional(flow, tol)) {
    throw std::logic_error("branching on an integral commodity");
  }
  const Network& net = inst.network();
  std::vector<const PathFlow*> carrying;
  int fractional_paths = 0;
  for (const PathFlow& p : flow.paths) {
    if (p.ratio > tol) carrying.push_back(&p);
    if (Strict(p.ratio, tol)) ++fractional_paths;
  }
  const bool y_free = parent.y_fix(k) == YFix::kFree;
  std::vector<BranchChild> children;
  if (carrying.size() < 2 || (fractional_paths <= 1 && y_free)) {
    if (!y_free) throw std::logic_error("no branching rule applies");
    children.push_back({parent, "y=0"});
    children.back().restrictions.FixY(k, YFix::kZero);
    children.push_back({parent, "y=1"});
    children.back().restrictions.FixY(k, YFix::kOne);
    return children;
  }

  std::vector<std::vector<int>> paths;
  for (const PathFlow* p : carrying) paths.push_back(p->arcs);
  const int source = inst.commodity(k).source;
  Divergence div = FindDivergence(net, source, paths);

  std::map<int, double> usage;
  for (const PathFlow* p : carrying) {
    int a = p->arcs[div.common.size()];
    usage[a] += p->ratio;
  }
  int a_star = -1;
  double best = -1.0;
  for (auto [a, u] : usage) {  // ascending arc id
    if (u > best + 1e-12) {
      best = u;
      a_star = a;
    }
  }

  // Prefix node i is the tail of common[i].
  auto force_prefix = [&](Restrictions& r, size_t upto) {
    for (size_t i = 0; i < upto; ++i) {
      int keep = div.common[i];
      for (int a : net.out_arcs(net.arc(keep).tail)) {
        if (a != keep) r.Forbid(k, a);
      }
    }
  };

  BranchChild a_child{parent, "A"};
  force_prefix(a_child.restrictions, div.common.size());
  for (int a : net.out_arcs(div.node)) {
    if (a != a_star) a_child.restrictions.Forbid(k, a);
  }
  a_child.restrictions.FixY(k, YFix::kZero);
  children.push_back(std::move(a_child));

  BranchChild b_child{parent, "B"};
  force_prefix(b_child.restrictions, div.common.size());
  b_child.restrictions.Forbid(k, a_star);
  b_child.restrictions.FixY(k, YFix::kZero);
  children.push_back(std::move(b_child));

  for (size_t i = div.common.size(); i-- > 0;) {
    int arc = div.common[i];
    BranchChild c{parent, "C(" + net.node_name(net.arc(arc).tail) + ")"};
    force_prefix(c.restrictions, i);
    c.restrictions.Forbid(k, arc);
    c.restrictions.FixY(k, YFix::kZero);
    children.push_back(std::move(c));
  }

  if (y_free) {
    children.push_back({parent, "D"});
    children.back().restrictions.FixY(k, YFix::kOne);
  }
  return children;
}

}  // namespace cmcf
