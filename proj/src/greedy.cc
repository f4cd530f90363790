#include "cmcf/greedy.h"

#include <limits>
#include <numeric>

#include "cmcf/errors.h"
#include "cmcf/shortest_path.h"

namespace cmcf {

GreedyResult GreedyOnce(const Instance& inst, std::span<const int> order) {
  const Network& net = inst.network();
  const int A = net.num_arcs();
  GreedyResult out;
  out.order.assign(order.begin(), order.end());
  out.solution = FlowSolution::AllRejected(inst);
  std::vector<double> load(A, 0.0), weight(A, 0.0);
  std::vector<char> allowed(A, 0);
  for (int k : order) {
    const Commodity& c = inst.commodity(k);
    for (int a = 0; a < A; ++a) {
      const Arc& arc = net.arc(a);
      double next = load[a] + c.bandwidth;
      allowed[a] = next <= arc.capacity * (1.0 + 1e-12);
      weight[a] = allowed[a] ? arc.cost.Evaluate(next) - arc.cost.Evaluate(load[a]) : 0.0;
    }
    auto sp = ShortestPath(net, c.source, c.target, weight, allowed);
    if (!sp) continue;
    for (int a : sp->arcs) load[a] += c.bandwidth;
    out.solution.commodities[k].rejected = 0.0;
    out.solution.commodities[k].paths.push_back({sp->arcs, 1.0});
  }
  out.objective = Objective(inst, out.solution);
  return out;
}

std::uint64_t Shuffler::Below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

void Shuffler::Shuffle(std::vector<int>& items) {
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = Below(i);
    std::swap(items[i - 1], items[j]);
  }
}

GreedyResult MultiStartGreedy(const Instance& inst, int n_starts,
                              std::uint64_t seed) {
  if (n_starts < 1) throw ConfigError("n_starts must be at least 1");
  Shuffler shuffler(seed);
  std::vector<int> order(inst.num_commodities());
  GreedyResult best;
  for (int s = 0; s < n_starts; ++s) {
    std::iota(order.begin(), order.end(), 0);
    shuffler.Shuffle(order);
    GreedyResult r = GreedyOnce(inst, order);
    if (s == 0 || r.objective < best.objective) best = std::move(r);
  }
  best.seed = seed;
  return best;
}

}  // namespace cmcf
