#include "cmcf/one_dim.h"

#include <algorithm>
#include <cmath>

namespace cmcf {

OneDimResult GoldenSectionMaximize(const std::function<double(double)>& h,
                                   double lo, double hi, int max_iterations,
                                   double tolerance) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  OneDimResult best;
  auto consider = [&](double x, double v) {
    ++best.evaluations;
    if (best.evaluations == 1 || v > best.value) {
      best.x = x;
      best.value = v;
    }
  };
  if (!(hi > lo)) {
    consider(lo, h(lo));
    return best;
  }
  consider(lo, h(lo));
  consider(hi, h(hi));
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = h(x1), f2 = h(x2);
  consider(x1, f1);
  consider(x2, f2);
  for (int it = 0; it < max_iterations && (b - a) > tolerance; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = h(x2);
      consider(x2, f2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = h(x1);
      consider(x1, f1);
    }
  }
  double mid = 0.5 * (a + b);
  consider(mid, h(mid));
  return best;
}

OneDimResult GridGoldenMaximize(const std::function<double(double)>& h,
                                double lo, double hi, int grid_points,
                                int max_iterations, double tolerance) {
  grid_points = std::max(grid_points, 2);
  if (!(hi > lo)) return GoldenSectionMaximize(h, lo, hi, 0, tolerance);
  double step = (hi - lo) / (grid_points - 1);
  int best_i = 0;
  double best_v = h(lo);
  for (int i = 1; i < grid_points; ++i) {
    double v = h(i == grid_points - 1 ? hi : lo + i * step);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  double a = std::max(lo, lo + (best_i - 1) * step);
  double b = std::min(hi, lo + (best_i + 1) * step);
  OneDimResult local = GoldenSectionMaximize(h, a, b, max_iterations, tolerance);
  local.evaluations += grid_points;
  double grid_x = best_i == grid_points - 1 ? hi : lo + best_i * step;
  if (best_v > local.value) {
    local.x = grid_x;
    local.value = best_v;
  }
  return local;
}

}  // namespace cmcf
