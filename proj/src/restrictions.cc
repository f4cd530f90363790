#include "cmcf/restrictions.h"

#include <sstream>

namespace cmcf {
namespace {

constexpr double kCapacitySlack = 1e-9;

}  // namespace

const char* YFixName(YFix fix) {
  switch (fix) {
    case YFix::kFree:
      return "free";
    case YFix::kZero:
      return "0";
    case YFix::kOne:
      return "1";
  }
  return "?";
}

Restrictions::Restrictions(int num_commodities, int num_arcs)
    : num_arcs_(num_arcs),
      forbidden_(static_cast<size_t>(num_commodities) * num_arcs, 0),
      y_(num_commodities, YFix::kFree) {}

std::vector<int> Restrictions::ForcedArcs(const Instance& inst, int k) const {
  std::vector<int> forced;
  if (y_[k] != YFix::kZero) return forced;
  const Network& net = inst.network();
  const Commodity& c = inst.commodity(k);
  std::vector<char> seen(net.num_nodes(), 0);
  int at = c.source;
  while (at != c.target && !seen[at]) {
    seen[at] = 1;
    int only = -1;
    int count = 0;
    for (int a : net.out_arcs(at)) {
      if (forbidden(k, a)) continue;
      if (net.arc(a).capacity + kCapacitySlack < c.bandwidth) continue;
      ++count;
      only = a;
    }
    if (count != 1) break;
    forced.push_back(only);
    at = net.arc(only).head;
  }
  return forced;
}

std::vector<char> Restrictions::Admissible(const Instance& inst, int k,
                                           bool capacity_rules) const {
  const Network& net = inst.network();
  std::vector<char> mask(net.num_arcs(), 1);
  for (int a = 0; a < net.num_arcs(); ++a) {
    if (forbidden(k, a)) mask[a] = 0;
  }
  if (!capacity_rules) return mask;
  const double b = inst.commodity(k).bandwidth;
  std::vector<double> reserved(net.num_arcs(), 0.0);
  for (int j = 0; j < inst.num_commodities(); ++j) {
    if (j == k) continue;
    for (int a : ForcedArcs(inst, j)) reserved[a] += inst.commodity(j).bandwidth;
  }
  for (int a = 0; a < net.num_arcs(); ++a) {
    double cap = net.arc(a).capacity;
    if (cap + kCapacitySlack < b) mask[a] = 0;
    if (cap - reserved[a] + kCapacitySlack * (1.0 + cap) < b) mask[a] = 0;
  }
  return mask;
}

bool Restrictions::PathAllowed(const Instance& inst, int k,
                               const std::vector<int>& arcs,
                               bool capacity_rules) const {
  if (!capacity_rules) {
    for (int a : arcs) {
      if (forbidden(k, a)) return false;
    }
    return true;
  }
  std::vector<char> mask = Admissible(inst, k, true);
  for (int a : arcs) {
    if (!mask[a]) return false;
  }
  return true;
}

std::string Restrictions::DebugString() const {
  std::ostringstream out;
  for (int k = 0; k < num_commodities(); ++k) {
    out << "k" << k << " y=" << YFixName(y_[k]) << " forbid{";
    bool first = true;
    for (int a = 0; a < num_arcs_; ++a) {
      if (!forbidden(k, a)) continue;
      out << (first ? "" : ",") << a;
      first = false;
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace cmcf
