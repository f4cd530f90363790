#include "cmcf/greedy.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "oracles/oracles.h"

namespace cmcf {
namespace {

TEST(Shuffler, DeterministicPermutations) {
  Shuffler a(42), b(42), c(43);
  std::vector<int> x(20), y(20), z(20);
  std::iota(x.begin(), x.end(), 0);
  y = z = x;
  a.Shuffle(x);
  b.Shuffle(y);
  c.Shuffle(z);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
  std::sort(x.begin(), x.end());
  for (int i = 0; i < 20; ++i) EXPECT_EQ(x[i], i);
}

TEST(Shuffler, BelowIsUnbiasedEnough) {
  Shuffler s(1);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 30000; ++i) ++counts[s.Below(3)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  EXPECT_EQ(s.Below(1), 0u);
}

TEST(Greedy, RoutesOnMarginalCostAndRejectsWhenFull) {
  Network net;
  for (auto n : {"s", "t"}) net.AddNode(n);
  net.AddArc(0, 1, 3.0, CostFunction::Quadratic(1.0));
  net.AddArc(0, 1, 3.0, CostFunction::Quadratic(1.0));
  Instance inst(net, {{0, 0, 1, 2.0}, {0, 0, 1, 2.0}, {0, 0, 1, 2.0}});
  std::vector<int> order{0, 1, 2};
  GreedyResult g = GreedyOnce(inst, order);
  EXPECT_EQ(g.solution.commodities[0].paths[0].arcs, std::vector<int>{0});
  EXPECT_EQ(g.solution.commodities[1].paths[0].arcs, std::vector<int>{1});
  EXPECT_EQ(g.solution.commodities[2].rejected, 1.0);
  EXPECT_TRUE(CheckFeasible(inst, g.solution).empty());
  EXPECT_DOUBLE_EQ(g.objective, Objective(inst, g.solution));
}

TEST(Greedy, MultiStartNeverWorseThanItsFirstStart) {
  std::mt19937_64 rng(3);
  oracle::RandomInstanceSpec spec;
  spec.costs = oracle::RandomInstanceSpec::Costs::kQuadratic;
  for (int t = 0; t < 20; ++t) {
    Instance inst = oracle::RandomInstance(rng, spec);
    GreedyResult one = MultiStartGreedy(inst, 1, 7);
    GreedyResult many = MultiStartGreedy(inst, 16, 7);
    EXPECT_LE(many.objective, one.objective + 1e-12);
    EXPECT_TRUE(CheckFeasible(inst, many.solution).empty());
    EXPECT_TRUE(many.solution.IsIntegral());
    GreedyResult again = MultiStartGreedy(inst, 16, 7);
    EXPECT_EQ(again.objective, many.objective);
    EXPECT_EQ(again.order, many.order);
  }
}

}  // namespace
}  // namespace cmcf
