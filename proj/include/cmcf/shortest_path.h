#ifndef CMCF_SHORTEST_PATH_H_
#define CMCF_SHORTEST_PATH_H_

#include <optional>
#include <span>
#include <vector>

#include "cmcf/network.h"

namespace cmcf {

struct ShortestPathResult {
  std::vector<int> arcs;
  double cost = 0.0;
};

// Minimum-weight source→target path over arcs with allowed[a] != 0 (an empty
// mask allows every arc). Negative weights are clamped to zero. Among paths of
// equal weight (within 1e-10 relative) the fewest-hop ones are preferred, and
// among those the lexicographically smallest arc-id sequence, so zero weights
// give a deterministic shortest-hop path. nullopt when target is unreachable.
std::optional<ShortestPathResult> ShortestPath(const Network& network,
                                               int source, int target,
                                               std::span<const double> weights,
                                               std::span<const char> allowed = {});

}  // namespace cmcf

#endif  // CMCF_SHORTEST_PATH_H_
