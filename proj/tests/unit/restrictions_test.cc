#include "cmcf/restrictions.h"

#include "gtest/gtest.h"

namespace cmcf {
namespace {

// s -> a -> t, s -> t (narrow), a -> b -> t.
Instance Chain() {
  Network net;
  for (auto n : {"s", "a", "b", "t"}) net.AddNode(n);
  net.AddArc(0, 1, 5, CostFunction::Linear(1));  // 0 s-a
  net.AddArc(1, 3, 5, CostFunction::Linear(1));  // 1 a-t
  net.AddArc(0, 3, 1, CostFunction::Linear(1));  // 2 s-t
  net.AddArc(1, 2, 5, CostFunction::Linear(1));  // 3 a-b
  net.AddArc(2, 3, 5, CostFunction::Linear(1));  // 4 b-t
  return Instance(std::move(net), {{0, 0, 3, 3.0}, {0, 0, 3, 3.0}});
}

TEST(Restrictions, DefaultsAreFree) {
  Instance inst = Chain();
  Restrictions r(inst);
  EXPECT_EQ(r.num_commodities(), 2);
  EXPECT_EQ(r.num_arcs(), 5);
  EXPECT_EQ(r.y_fix(0), YFix::kFree);
  EXPECT_TRUE(r.ForcedArcs(inst, 0).empty());
  EXPECT_EQ(r.Admissible(inst, 0, false), std::vector<char>(5, 1));
}

TEST(Restrictions, ForcedArcsNeedYZero) {
  Instance inst = Chain();
  Restrictions r(inst);
  r.Forbid(0, 3);
  EXPECT_TRUE(r.ForcedArcs(inst, 0).empty());
  r.FixY(0, YFix::kZero);
  // s-t is too narrow for b = 3, so s-a then a-t are forced.
  EXPECT_EQ(r.ForcedArcs(inst, 0), (std::vector<int>{0, 1}));
}

TEST(Restrictions, CapacityRulesUseReservations) {
  Instance inst = Chain();
  Restrictions r(inst);
  r.FixY(0, YFix::kZero);
  // Commodity 0 is forced onto s-a; 5 - 3 < 3 leaves no room for commodity 1.
  auto mask = r.Admissible(inst, 1, true);
  EXPECT_EQ(mask[0], 0);
  EXPECT_EQ(mask[2], 0);  // narrow arc
  EXPECT_EQ(mask[1], 1);
  EXPECT_EQ(r.Admissible(inst, 1, false), std::vector<char>(5, 1));
  EXPECT_FALSE(r.PathAllowed(inst, 1, {0, 1}, true));
  EXPECT_TRUE(r.PathAllowed(inst, 1, {0, 1}, false));
  r.Forbid(1, 1);
  EXPECT_FALSE(r.PathAllowed(inst, 1, {0, 1}, false));
}

TEST(Restrictions, EqualityAndDebugString) {
  Instance inst = Chain();
  Restrictions a(inst), b(inst);
  EXPECT_EQ(a, b);
  a.Forbid(1, 4);
  a.FixY(1, YFix::kOne);
  EXPECT_NE(a, b);
  EXPECT_NE(a.DebugString().find("k1 y=1 forbid{4}"), std::string::npos);
}

}  // namespace
}  // namespace cmcf
