#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fraclimit/function_descriptor.hpp"
#include "fraclimit/handedness.hpp"
#include "fraclimit/rational.hpp"

namespace fraclimit::gl {

struct CoupledEvalResult {
    double x = 0.0;
    Rational R;
    double q = 0.0;
    std::int64_t N = 0;
    double h = 0.0; // q*x/N (0 only in the classical q = 0 fallback)
    double gl_value = 0.0;
    double rl_value = 0.0;
    double abs_error = 0.0;
    Handedness handedness = Handedness::Forward; // Forward iff h > 0
};

struct ConvergenceRow {
    std::int64_t N = 0;
    double h = 0.0;
    double gl_value = 0.0;
    double rl_value = 0.0;
    double abs_error = 0.0;
    std::optional<double> observed_order; // empty on the first row
};

// h^{-R} * sum_{k=0}^{N} C(R,k)(-1)^k f(x - k h), the raw truncated
// difference quotient at a fixed step. ZeroStepError at h = 0; h < 0 needs an
// odd-denominator order (BranchError else).
double gl_partial_sum(const FunctionDescriptor& f, double x, const Rational& R, double h,
                      std::int64_t N);

// The coupled evaluation h = q*x/N against the closed-form target.
// x = 0 is degenerate; q = 0 falls back to the classical derivative when R is
// a positive integer and is degenerate otherwise.
CoupledEvalResult gl_coupled(const FunctionDescriptor& f, double x, const Rational& R, double q,
                             std::int64_t N);

// One gl_coupled row per schedule entry (strictly increasing N >= 1), with
// the observed convergence order between consecutive rows. Entries may be
// evaluated concurrently (max_threads caps the pool, 0 = hardware default);
// rows are assembled in schedule order and are bit-identical to a
// sequential run regardless of thread count.
std::vector<ConvergenceRow> convergence_sweep(const FunctionDescriptor& f, double x,
                                              const Rational& R, double q,
                                              const std::vector<std::int64_t>& schedule,
                                              unsigned max_threads = 0);

} // namespace fraclimit::gl
