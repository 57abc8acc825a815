#pragma once

#include <cmath>

namespace snul {

// Neumaier compensated accumulator. Summation order is part of the
// contract: callers add terms in a fixed order so results are
// reproducible across runs.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace snul
