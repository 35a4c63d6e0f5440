#pragma once

#include <cmath>

namespace fraclimit {

// Neumaier-compensated accumulator. The alternating-weight sums in this
// library cancel to values orders of magnitude below the largest term, so the
// running compensation term is kept and folded in only at read-out.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace fraclimit
