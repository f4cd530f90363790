#ifndef CMCF_SNDLIB_H_
#define CMCF_SNDLIB_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmcf/cost_function.h"
#include "cmcf/network.h"

namespace cmcf {

struct RawLink {
  std::string id;
  std::string source;
  std::string target;
  double capacity = 0.0;
  std::optional<double> cost;
};

struct RawDemand {
  std::string id;
  std::string source;
  std::string target;
  double value = 0.0;
};

struct RawInstance {
  std::string name;
  std::vector<std::string> nodes;
  std::vector<RawLink> links;
  std::vector<RawDemand> demands;
  int declared_links = 0;  // before symmetrization
};

// SNDlib native format. Capacity is the pre-installed capacity when
// positive, else the first module's capacity; the cost is the cost paid for
// that capacity when positive. Other fields are ignored, and sections other
// than NODES, LINKS and DEMANDS are skipped. Throws ParseError.
RawInstance ParseSndlib(std::string_view text);
RawInstance ReadSndlibFile(const std::string& path);

// Adds (v, u) for every (u, v) without a declared reverse; idempotent.
RawInstance Symmetrize(const RawInstance& raw);

// Demands sharing (source, target) become one, in first-appearance order.
RawInstance MergeCommodities(const RawInstance& raw);

// f_a such that r_a(c_a) equals the link cost C_a (C_a = 1 when absent):
// linear C/c, quadratic C/c^2, Kleinrock d = 1.01 c and f = 0.01 C c.
// Throws CalibrationError for c_a = 0 with a nonzero cost, ConfigError for
// an unsupported kind.
Instance Calibrate(const RawInstance& raw, CostKind kind);

// The cost function of kind `kind` with r(capacity) = cost.
CostFunction CalibratedCost(CostKind kind, double capacity, double cost);

CostKind ParseCostKind(std::string_view name);

}  // namespace cmcf

#endif  // CMCF_SNDLIB_H_
