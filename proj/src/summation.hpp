#pragma once

#include <cmath>

namespace pearle {

// Neumaier's compensated summation. Keeps grid sums accurate to a few ulp
// regardless of term ordering, so printed reference values are stable to
// well below the 1e-6 comparison tolerance used by the checks.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace pearle
