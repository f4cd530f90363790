#ifndef CMCF_ONE_DIM_H_
#define CMCF_ONE_DIM_H_

#include <functional>

namespace cmcf {

struct OneDimResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

// Golden-section maximization of a unimodal h on [lo, hi]. Stops after
// max_iterations or when the bracket is shorter than tolerance. Both
// endpoints are also evaluated, so monotone h returns an endpoint exactly.
OneDimResult GoldenSectionMaximize(const std::function<double(double)>& h,
                                   double lo, double hi,
                                   int max_iterations = 200,
                                   double tolerance = 0.0);

// Uniform grid pass (grid_points samples, endpoints included) followed by a
// golden-section refinement between the best sample's neighbours. For
// functions that are not unimodal.
OneDimResult GridGoldenMaximize(const std::function<double(double)>& h,
                                double lo, double hi, int grid_points = 256,
                                int max_iterations = 200,
                                double tolerance = 0.0);

}  // namespace cmcf

#endif  // CMCF_ONE_DIM_H_
