#include "cmcf/one_dim.h"

#include <cmath>

#include "gtest/gtest.h"

namespace cmcf {
namespace {

TEST(GoldenSection, FindsInteriorMaximum) {
  auto r = GoldenSectionMaximize([](double x) { return -(x - 1.3) * (x - 1.3); },
                                 0.0, 5.0);
  EXPECT_NEAR(r.x, 1.3, 1e-8);
  EXPECT_GT(r.evaluations, 3);
}

TEST(GoldenSection, MonotoneReturnsEndpointExactly) {
  EXPECT_EQ(GoldenSectionMaximize([](double x) { return x; }, 0.5, 2.0).x, 2.0);
  EXPECT_EQ(GoldenSectionMaximize([](double x) { return -x; }, 0.5, 2.0).x, 0.5);
}

TEST(GoldenSection, DegenerateInterval) {
  auto r = GoldenSectionMaximize([](double x) { return x * x; }, 3.0, 3.0);
  EXPECT_EQ(r.x, 3.0);
  EXPECT_EQ(r.value, 9.0);
}

TEST(GridGolden, EscapesLocalMaximum) {
  // Local max near 1, global max near 4.
  auto h = [](double x) { return std::sin(2.0 * x) + 0.3 * x; };
  auto plain = GridGoldenMaximize(h, 0.0, 5.0);
  double best = -1e9, arg = 0;
  for (double x = 0; x <= 5; x += 1e-5) {
    if (h(x) > best) best = h(x), arg = x;
  }
  EXPECT_NEAR(plain.x, arg, 1e-4);
  EXPECT_NEAR(plain.value, best, 1e-9);
}

}  // namespace
}  // namespace cmcf
