#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical domain of an operation (negative T, z <= 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Input data violating a documented invariant (table rows, profiles, layer stacks).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requested on a model that does not support it.
class UnsupportedOperation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Inconsistent combination of otherwise valid settings (e.g. prescription vs material).
class ConfigurationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sphere-plate geometry outside the range where the proximity approximation is usable.
class GeometryError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Quadrature or derivative failing to reach its tolerance. Carries what was achieved.
class NumericError : public std::runtime_error {
public:
  NumericError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what + " (estimate " + format(estimate) + ", error bound " +
                           format(error_bound) + ")"),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
  }

private:
  double estimate_;
  double error_bound_;
};

}  // namespace casimir
