#include "cmcf/flow_deviation.h"

#include <cmath>
#include <random>

#include "cmcf/errors.h"
#include "cmcf/inner.h"
#include "gtest/gtest.h"
#include "oracles/oracles.h"

namespace cmcf {
namespace {

TEST(SmoothedCost, KleinrockContinuationIsC1) {
  auto r = CostFunction::Kleinrock(2.0, 4.0);
  double x0 = 0.99 * 4.0;
  EXPECT_DOUBLE_EQ(SmoothedCost(r, 1.0, 0.99), r.Evaluate(1.0));
  EXPECT_NEAR(SmoothedCost(r, x0 - 1e-9, 0.99), SmoothedCost(r, x0 + 1e-9, 0.99),
              1e-4);
  EXPECT_NEAR(SmoothedDerivative(r, x0 - 1e-9, 0.99),
              SmoothedDerivative(r, x0 + 1e-9, 0.99), 1e-2);
  EXPECT_NO_THROW(SmoothedCost(r, 10.0, 0.99));
  EXPECT_GT(SmoothedDerivative(r, 10.0, 0.99), SmoothedDerivative(r, 5.0, 0.99));
}

TEST(AllOrNothing, ShortestRoutesAndDisconnection) {
  Network net;
  for (auto n : {"s", "a", "t"}) net.AddNode(n);
  net.AddArc(0, 1, 1, CostFunction::Linear(1));
  net.AddArc(1, 2, 1, CostFunction::Linear(1));
  net.AddArc(0, 2, 1, CostFunction::Linear(1));
  Instance inst(net, {{0, 0, 2, 3.0}});
  std::vector<double> w{1.0, 1.0, 5.0};
  FlowSolution routes;
  auto loads = AllOrNothing(inst, w, &routes);
  EXPECT_EQ(loads, (std::vector<double>{3.0, 3.0, 0.0}));
  EXPECT_EQ(routes.commodities[0].paths[0].arcs, (std::vector<int>{0, 1}));

  Instance cut(net, {{0, 2, 0, 1.0}});
  EXPECT_THROW(AllOrNothing(cut, w), ConfigError);
}

TEST(FlowDeviation, SinglePathConvergesImmediately) {
  Network net;
  for (auto n : {"s", "t"}) net.AddNode(n);
  net.AddArc(0, 1, 1.0, CostFunction::Quadratic(1.0));
  Instance inst(net, {{0, 0, 1, 2.0}});
  FwState fw = RunFlowDeviation(inst);
  EXPECT_TRUE(fw.converged);
  EXPECT_LE(fw.iterations, 1);
  EXPECT_DOUBLE_EQ(fw.objective, 4.0);
}

TEST(FlowDeviation, ParallelQuadraticArcsSplitEvenly) {
  Network net;
  for (auto n : {"s", "t"}) net.AddNode(n);
  net.AddArc(0, 1, 10.0, CostFunction::Quadratic(1.0));
  net.AddArc(0, 1, 10.0, CostFunction::Quadratic(1.0));
  Instance inst(net, {{0, 0, 1, 2.0}});
  FwState fw = RunFlowDeviation(inst);
  EXPECT_TRUE(fw.converged);
  EXPECT_NEAR(fw.loads[0], 1.0, 1e-6);
  EXPECT_NEAR(fw.loads[1], 1.0, 1e-6);
  EXPECT_NEAR(fw.objective, 2.0, 1e-9);
}

TEST(FlowDeviation, IgnoresCapacities) {
  // Both arcs have capacity 1 but the uncapacitated optimum puts 1.5 on each.
  Network net;
  for (auto n : {"s", "t"}) net.AddNode(n);
  net.AddArc(0, 1, 1.0, CostFunction::Quadratic(1.0));
  net.AddArc(0, 1, 1.0, CostFunction::Quadratic(1.0));
  Instance inst(net, {{0, 0, 1, 3.0}});
  FwState fw = RunFlowDeviation(inst);
  EXPECT_TRUE(fw.converged);
  EXPECT_GT(fw.loads[0], inst.network().arc(0).capacity);
  EXPECT_FALSE(CheckFeasible(inst, fw.solution).empty());
}

TEST(FlowDeviation, MatchesSplittableOptimumWhenCapacitiesAreLoose) {
  std::mt19937_64 rng(14);
  oracle::RandomInstanceSpec spec;
  spec.costs = oracle::RandomInstanceSpec::Costs::kQuadratic;
  spec.min_capacity = 200.0;
  spec.max_capacity = 300.0;
  for (int t = 0; t < 8; ++t) {
    Instance inst = oracle::RandomInstance(rng, spec);
    FlowDeviationOptions opt;
    opt.tolerance = 1e-5;
    opt.max_iterations = 100000;
    FwState fw = RunFlowDeviation(inst, opt);
    EXPECT_TRUE(CheckFeasible(inst, fw.solution).empty());
    auto loads = fw.solution.ArcLoads(inst);
    for (size_t a = 0; a < loads.size(); ++a) {
      EXPECT_NEAR(loads[a], fw.loads[a], 1e-6 * (1 + fw.loads[a]));
    }
    double inner = MakeInnerRelaxation(inst, InnerMode::kInner)
                       ->Solve(Restrictions(inst), {})
                       .bound;
    // Plain Frank-Wolfe can stall; the gap certificate holds regardless.
    if (fw.converged) {
      EXPECT_NEAR(fw.objective, inner, 1e-3 * inner);
    }
    EXPECT_LE(fw.objective - fw.gap, inner + 1e-6 * (1 + inner));
    EXPECT_GE(fw.objective, inner - 1e-5 * (1 + inner));
    for (size_t i = 1; i < fw.objective_trajectory.size(); ++i) {
      EXPECT_LE(fw.objective_trajectory[i], fw.objective_trajectory[i - 1] + 1e-9);
    }
  }
}

}  // namespace
}  // namespace cmcf
