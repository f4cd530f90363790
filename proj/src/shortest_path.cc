#include "cmcf/shortest_path.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

namespace cmcf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool Close(double a, double b) {
  return std::fabs(a - b) <= 1e-10 * (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

// (dist, hops) strictly better, with a tolerance on dist.
bool Better(double d1, int h1, double d2, int h2) {
  if (Close(d1, d2)) return h1 < h2;
  return d1 < d2;
}

}  // namespace

std::optional<ShortestPathResult> ShortestPath(const Network& network,
                                               int source, int target,
                                               std::span<const double> weights,
                                               std::span<const char> allowed) {
  const int n = network.num_nodes();
  auto is_allowed = [&](int a) { return allowed.empty() || allowed[a] != 0; };
  auto weight = [&](int a) { return std::max(0.0, weights[a]); };

  // Distances to the target over reversed arcs.
  std::vector<double> dist(n, kInf);
  std::vector<int> hops(n, std::numeric_limits<int>::max());
  std::vector<int> next_arc(n, -1);
  using Entry = std::tuple<double, int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[target] = 0.0;
  hops[target] = 0;
  queue.emplace(0.0, 0, target);
  std::vector<char> done(n, 0);
  while (!queue.empty()) {
    auto [d, h, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    if (d != dist[v] || h != hops[v]) continue;
    done[v] = 1;
    for (int a : network.in_arcs(v)) {
      if (!is_allowed(a)) continue;
      int u = network.arc(a).tail;
      if (done[u]) continue;
      double nd = d + weight(a);
      int nh = h + 1;
      if (Better(nd, nh, dist[u], hops[u])) {
        dist[u] = nd;
        hops[u] = nh;
        next_arc[u] = a;
        queue.emplace(nd, nh, u);
      }
    }
  }
  if (dist[source] == kInf) return std::nullopt;

  ShortestPathResult result;
  int at = source;
  while (at != target) {
    int chosen = -1;
    for (int a : network.out_arcs(at)) {
      if (!is_allowed(a)) continue;
      int v = network.arc(a).head;
      if (dist[v] == kInf || hops[v] != hops[at] - 1) continue;
      if (Close(weight(a) + dist[v], dist[at])) {
        chosen = a;
        break;
      }
    }
    if (chosen < 0) chosen = next_arc[at];
    result.arcs.push_back(chosen);
    result.cost += weight(chosen);
    at = network.arc(chosen).head;
  }
  return result;
}

}  // namespace cmcf
