#ifndef CMCF_PATTERN_H_
#define CMCF_PATTERN_H_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "cmcf/colgen.h"
#include "cmcf/network.h"

namespace cmcf {

// Integer bandwidth scaling for the knapsack: the smallest power of ten up
// to 1e6 that makes every value integral within 1e-9; 1e6 with rounding
// otherwise.
struct BandwidthScale {
  double scale = 1.0;
  bool rounded = false;
  std::vector<long> weights;
};

BandwidthScale ScaleBandwidths(std::span<const double> bandwidths);

struct KnapsackItem {
  int id = 0;
  long weight = 0;
  double profit = 0.0;
};

struct KnapsackChoice {
  std::vector<int> ids;  // sorted
  long weight = 0;
  double score = 0.0;  // max_w best[w] - cost(w)
  long states = 0;
};

// max over subsets s with weight(s) <= capacity of
// sum_{i in s} profit_i - cost(weight(s)), by a 0/1 table over exact total
// weight. Ties go to the smaller total weight.
KnapsackChoice SolveNonlinearKnapsack(std::span<const KnapsackItem> items,
                                      long capacity,
                                      const std::function<double(long)>& cost);

// PATTERN restricted master. Rows: coverage per commodity, linking per
// (arc, commodity) pair with b_k <= c_a, convexity per arc. Starts with the
// empty pattern on every arc and the y columns. Paths obey the capacity
// admissibility rules.
std::unique_ptr<Relaxation> MakePatternRelaxation(const Instance& inst);

}  // namespace cmcf

#endif  // CMCF_PATTERN_H_
