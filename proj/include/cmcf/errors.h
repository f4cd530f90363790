#ifndef CMCF_ERRORS_H_
#define CMCF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cmcf {

// Load outside the domain of a cost function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input text. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Invalid model data or solver configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CalibrationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class ScalingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown inside the LP engine.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Column generation hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmcf

#endif  // CMCF_ERRORS_H_
