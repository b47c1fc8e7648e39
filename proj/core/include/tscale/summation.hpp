#pragma once

#include <cmath>

namespace tscale {

// Neumaier's variant of Kahan summation. All Delta-integrals accumulate
// through this in ascending index order.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(double initial) : sum_(initial) {}

  constexpr void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  constexpr CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  constexpr double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace tscale
