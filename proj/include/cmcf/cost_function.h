#ifndef CMCF_COST_FUNCTION_H_
#define CMCF_COST_FUNCTION_H_

#include <functional>
#include <string>

namespace cmcf {

enum class CostKind { kLinear, kQuadratic, kKleinrock, kBlackBox };

const char* CostKindName(CostKind kind);

// Increasing arc cost r(x) of the load x crossing an arc.
//
//   Linear     r(x) = f x
//   Quadratic  r(x) = f x^2
//   Kleinrock  r(x) = f / (d - x),  defined for x < d
//   BlackBox   user evaluator, declared convex or not, optional derivative
//
// Value type; black-box evaluators are shared, so copies are cheap and the
// evaluator must be safe to call concurrently.
class CostFunction {
 public:
  using Evaluator = std::function<double(double)>;

  static CostFunction Linear(double f);
  static CostFunction Quadratic(double f);
  static CostFunction Kleinrock(double f, double d);
  static CostFunction BlackBox(Evaluator value, bool convex,
                               Evaluator derivative = nullptr,
                               std::string label = "blackbox");

  CostKind kind() const { return kind_; }
  double f() const { return f_; }
  double d() const { return d_; }
  bool convex() const { return convex_; }
  bool has_derivative() const {
    return kind_ != CostKind::kBlackBox || static_cast<bool>(derivative_);
  }
  const std::string& label() const { return label_; }

  // Throws DomainError for x < 0 or, for Kleinrock, x >= d. Round-off
  // negatives down to -1e-12 are read as zero.
  double Evaluate(double x) const;

  // Analytic for the closed-form kinds. Black-box functions without a
  // supplied derivative use a central difference with step
  // max(1e-6, 1e-8 * scale), one-sided near zero.
  double Derivative(double x, double scale = 1.0) const;

  // Closed-form kinds only; black-box falls back to a central difference.
  double SecondDerivative(double x, double scale = 1.0) const;

  // Upper bound on sup |r'| over [0, cap]. r'(cap) for the closed-form kinds,
  // twice the steepest chord of a 64-point grid for black-box functions.
  double LipschitzBound(double cap) const;

  std::string ToString() const;

 private:
  CostFunction() = default;

  CostKind kind_ = CostKind::kLinear;
  double f_ = 0.0;
  double d_ = 0.0;
  bool convex_ = true;
  Evaluator value_;
  Evaluator derivative_;
  std::string label_;
};

}  // namespace cmcf

#endif  // CMCF_COST_FUNCTION_H_
