#include "cmcf/instance_json.h"

#include <random>

#include "cmcf/errors.h"
#include "gtest/gtest.h"
#include "oracles/oracles.h"

namespace cmcf {
namespace {

TEST(InstanceJson, RoundTripIsByteStable) {
  std::mt19937_64 rng(2);
  oracle::RandomInstanceSpec spec;
  spec.costs = oracle::RandomInstanceSpec::Costs::kMixed;
  spec.integral_bandwidth = false;
  for (int t = 0; t < 20; ++t) {
    Instance inst = oracle::RandomInstance(rng, spec);
    std::string text = InstanceToJson(inst);
    Instance back = InstanceFromJson(text);
    EXPECT_EQ(InstanceToJson(back), text);
    ASSERT_EQ(back.num_arcs(), inst.num_arcs());
    EXPECT_EQ(back.penalty(), inst.penalty());
    for (int a = 0; a < inst.num_arcs(); ++a) {
      const Arc& x = inst.network().arc(a);
      const Arc& y = back.network().arc(a);
      EXPECT_EQ(x.capacity, y.capacity);
      EXPECT_EQ(x.cost.kind(), y.cost.kind());
      EXPECT_EQ(x.cost.Evaluate(x.capacity / 2), y.cost.Evaluate(y.capacity / 2));
    }
    for (int k = 0; k < inst.num_commodities(); ++k) {
      EXPECT_EQ(inst.commodity(k).bandwidth, back.commodity(k).bandwidth);
    }
  }
}

TEST(InstanceJson, Errors) {
  EXPECT_THROW(InstanceFromJson("{"), ParseError);
  EXPECT_THROW(InstanceFromJson(R"({"nodes": ["a"], "arcs": [], "commodities": [)"
                                R"({"src": "a", "dst": "b", "bw": 1}]})"),
               ConfigError);
  Network net;
  net.AddNode("a");
  net.AddNode("b");
  net.AddArc(0, 1, 1, CostFunction::BlackBox([](double x) { return x; }, true));
  EXPECT_THROW(InstanceToJson(Instance(net, {})), ConfigError);
  EXPECT_THROW(FormatReal(1.0 / 0.0), ConfigError);
  EXPECT_EQ(FormatReal(0.1), "0.10000000000000001");
}

}  // namespace
}  // namespace cmcf
