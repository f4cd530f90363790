#ifndef CMCF_GREEDY_H_
#define CMCF_GREEDY_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cmcf/flow_solution.h"
#include "cmcf/network.h"

namespace cmcf {

struct GreedyResult {
  FlowSolution solution;
  double objective = 0.0;
  std::vector<int> order;
  std::uint64_t seed = 0;
};

// Routes commodities one by one in `order` on the path of least marginal
// cost r_a(x_a + b_k) - r_a(x_a), over arcs with x_a + b_k <= c_a; a
// commodity without such a path is rejected.
GreedyResult GreedyOnce(const Instance& inst, std::span<const int> order);

// The generator behind every shuffle: std::mt19937_64 seeded with `seed`.
// Shuffles are Fisher-Yates with an unbiased bounded draw (rejection on the
// top partial block), so results do not depend on the standard library's
// distribution implementations.
class Shuffler {
 public:
  explicit Shuffler(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t Below(std::uint64_t bound);
  void Shuffle(std::vector<int>& items);

 private:
  std::mt19937_64 engine_;
};

// Best of n_starts greedy runs over orders shuffled from one Shuffler stream
// seeded with `seed`. The first start uses the first shuffle.
GreedyResult MultiStartGreedy(const Instance& inst, int n_starts,
                              std::uint64_t seed);

}  // namespace cmcf

#endif  // CMCF_GREEDY_H_
