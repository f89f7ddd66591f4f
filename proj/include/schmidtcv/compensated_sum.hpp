#pragma once

#include <cmath>

namespace schmidtcv {

// Neumaier's variant of Kahan summation. The result depends only on the
// order in which terms are added.
class CompensatedSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double term) {
    add(term);
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace schmidtcv
