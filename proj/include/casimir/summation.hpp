#pragma once

#include <cmath>

namespace casimir {

/// Neumaier-compensated running sum. Terms are consumed in call order, so a fixed
/// call order gives bitwise-reproducible totals.
class CompensatedSum {
public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + compensation_; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace casimir
