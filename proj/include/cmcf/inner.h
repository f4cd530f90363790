#ifndef CMCF_INNER_H_
#define CMCF_INNER_H_

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "cmcf/colgen.h"
#include "cmcf/cost_function.h"
#include "cmcf/network.h"

namespace cmcf {

enum class InnerMode { kInner, kTight };

enum class VertexSearch {
  kAuto,    // closed form when the cost kind has one
  kSearch,  // always the derivative-free search
};

struct VertexCandidate {
  double c = 0.0;
  double gain = 0.0;  // B c - r(c)
  bool used_grid = false;
};

// argmax of B c - r(c) over [lo, hi]. Closed forms for linear, quadratic
// (c = B / 2f) and Kleinrock (c = d - sqrt(f / B)), clipped to the interval;
// golden-section search otherwise, preceded by a 256-point grid for
// non-convex black boxes.
VertexCandidate MaximizeVertexGain(const CostFunction& r, double beta,
                                   double lo, double hi,
                                   VertexSearch method = VertexSearch::kAuto);

// Threshold-aware version: B(c) = sum_{j: c >= f_j} beta_j. Each interval
// [f_j, f_{j+1}] is maximized with its constant B and the candidates are
// compared on the true B(c). thresholds sorted, thresholds[0] == 0.
VertexCandidate MaximizeTightVertexGain(const CostFunction& r, double capacity,
                                        std::span<const double> thresholds,
                                        std::span<const double> betas,
                                        VertexSearch method = VertexSearch::kAuto);

// {0} ∪ {b_k}, sorted, duplicates within 1e-12 relative merged.
std::vector<double> DefaultThresholds(const Instance& inst);

// INNER / TIGHT-INNER restricted master. Rows: one coverage row per
// commodity, load rows per arc (per arc and threshold when tight), one
// convexity row per arc. Starts with vertices {0, c_a} and the y columns,
// no paths. Tight mode applies the capacity admissibility rules to paths.
// Empty thresholds select DefaultThresholds().
std::unique_ptr<Relaxation> MakeInnerRelaxation(
    const Instance& inst, InnerMode mode, std::vector<double> thresholds = {});

}  // namespace cmcf

#endif  // CMCF_INNER_H_
