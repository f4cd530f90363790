#include "cmcf/cost_function.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cmcf/errors.h"

namespace cmcf {
namespace {

constexpr double kNegativeSlack = 1e-12;

double FiniteDifferenceStep(double scale) {
  return std::max(1e-6, 1e-8 * std::fabs(scale));
}

void RequirePositive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(what) + " must be a positive finite real");
  }
}

}  // namespace

const char* CostKindName(CostKind kind) {
  switch (kind) {
    case CostKind::kLinear:
      return "linear";
    case CostKind::kQuadratic:
      return "quadratic";
    case CostKind::kKleinrock:
      return "kleinrock";
    case CostKind::kBlackBox:
      return "blackbox";
  }
  return "unknown";
}

CostFunction CostFunction::Linear(double f) {
  RequirePositive(f, "linear cost factor");
  CostFunction fn;
  fn.kind_ = CostKind::kLinear;
  fn.f_ = f;
  fn.label_ = "linear";
  return fn;
}

CostFunction CostFunction::Quadratic(double f) {
  RequirePositive(f, "quadratic cost factor");
  CostFunction fn;
  fn.kind_ = CostKind::kQuadratic;
  fn.f_ = f;
  fn.label_ = "quadratic";
  return fn;
}

CostFunction CostFunction::Kleinrock(double f, double d) {
  RequirePositive(f, "Kleinrock factor");
  RequirePositive(d, "Kleinrock pole");
  CostFunction fn;
  fn.kind_ = CostKind::kKleinrock;
  fn.f_ = f;
  fn.d_ = d;
  fn.label_ = "kleinrock";
  return fn;
}

CostFunction CostFunction::BlackBox(Evaluator value, bool convex,
                                    Evaluator derivative, std::string label) {
  if (!value) throw ConfigError("black-box cost needs an evaluator");
  CostFunction fn;
  fn.kind_ = CostKind::kBlackBox;
  fn.convex_ = convex;
  fn.value_ = std::move(value);
  fn.derivative_ = std::move(derivative);
  fn.label_ = std::move(label);
  return fn;
}

double CostFunction::Evaluate(double x) const {
  if (x < 0.0) {
    if (x < -kNegativeSlack) {
      throw DomainError("negative load " + std::to_string(x));
    }
    x = 0.0;
  }
  switch (kind_) {
    case CostKind::kLinear:
      return f_ * x;
    case CostKind::kQuadratic:
      return f_ * x * x;
    case CostKind::kKleinrock:
      if (x >= d_) {
        throw DomainError("load " + std::to_string(x) +
                          " at or beyond Kleinrock pole " + std::to_string(d_));
      }
      return f_ / (d_ - x);
    case CostKind::kBlackBox:
      return value_(x);
  }
  return 0.0;
}

double CostFunction::Derivative(double x, double scale) const {
  if (x < -kNegativeSlack) {
    throw DomainError("negative load " + std::to_string(x));
  }
  x = std::max(x, 0.0);
  switch (kind_) {
    case CostKind::kLinear:
      return f_;
    case CostKind::kQuadratic:
      return 2.0 * f_ * x;
    case CostKind::kKleinrock: {
      if (x >= d_) throw DomainError("load at or beyond Kleinrock pole");
      double gap = d_ - x;
      return f_ / (gap * gap);
    }
    case CostKind::kBlackBox: {
      if (derivative_) return derivative_(x);
      double h = FiniteDifferenceStep(scale);
      if (x < h) return (value_(x + h) - value_(x)) / h;
      return (value_(x + h) - value_(x - h)) / (2.0 * h);
    }
  }
  return 0.0;
}

double CostFunction::SecondDerivative(double x, double scale) const {
  x = std::max(x, 0.0);
  switch (kind_) {
    case CostKind::kLinear:
      return 0.0;
    case CostKind::kQuadratic:
      return 2.0 * f_;
    case CostKind::kKleinrock: {
      if (x >= d_) throw DomainError("load at or beyond Kleinrock pole");
      double gap = d_ - x;
      return 2.0 * f_ / (gap * gap * gap);
    }
    case CostKind::kBlackBox: {
      double h = std::sqrt(FiniteDifferenceStep(scale)) * 1e-1;
      double lo = std::max(0.0, x - h);
      double hi = lo + 2.0 * h;
      double mid = lo + h;
      return (value_(hi) - 2.0 * value_(mid) + value_(lo)) / (h * h);
    }
  }
  return 0.0;
}

double CostFunction::LipschitzBound(double cap) const {
  cap = std::max(cap, 0.0);
  switch (kind_) {
    case CostKind::kLinear:
      return f_;
    case CostKind::kQuadratic:
      return 2.0 * f_ * cap;
    case CostKind::kKleinrock: {
      if (cap >= d_) throw DomainError("Lipschitz bound requested at the pole");
      double gap = d_ - cap;
      return f_ / (gap * gap);
    }
    case CostKind::kBlackBox: {
      if (cap == 0.0) return 2.0 * std::fabs(Derivative(0.0));
      constexpr int kGrid = 64;
      double step = cap / (kGrid - 1);
      double best = 0.0;
      double previous = value_(0.0);
      for (int i = 1; i < kGrid; ++i) {
        double x = i == kGrid - 1 ? cap : i * step;
        double current = value_(x);
        best = std::max(best, std::fabs(current - previous) / step);
        previous = current;
      }
      return 2.0 * best;
    }
  }
  return 0.0;
}

std::string CostFunction::ToString() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case CostKind::kLinear:
    case CostKind::kQuadratic:
      out << CostKindName(kind_) << "(f=" << f_ << ")";
      break;
    case CostKind::kKleinrock:
      out << "kleinrock(f=" << f_ << ", d=" << d_ << ")";
      break;
    case CostKind::kBlackBox:
      out << "blackbox(" << label_ << (convex_ ? ", convex" : ", non-convex")
          << ")";
      break;
  }
  return out.str();
}

}  // namespace cmcf
