#pragma once

#include <vector>

#include "fraclimit/function_descriptor.hpp"
#include "fraclimit/rational.hpp"

namespace fraclimit::rl {

// Closed-form fractional derivatives (lower terminal 0) used as the
// convergence targets for the difference quotients.

struct RLTerm {
    int degree = 0;
    double coefficient = 0.0;
    double contribution = 0.0;
};

struct RLValue {
    double value = 0.0;
    std::vector<RLTerm> terms; // one ledger entry per coefficient slot
};

// Gamma(m+1)/Gamma(m-R+1) * x^{m-R}. Integer R > m poles the denominator
// gamma, which is the reciprocal-gamma zero (classical derivative of too-low
// a power). Negative x needs an odd-denominator exponent (BranchError else).
double rl_power(int m, const Rational& R, double x);

// Linear extension over an ascending coefficient vector, with a per-term
// ledger. Zero coefficients contribute exactly 0 without being evaluated.
RLValue rl_polynomial(const std::vector<double>& coeffs, const Rational& R, double x);

// Same, but only accepts Taylor descriptors (ParameterError otherwise):
// the truncation is part of the function's identity here.
RLValue rl_taylor(const FunctionDescriptor& f, const Rational& R, double x);

// Dispatch for any descriptor.
RLValue rl_of(const FunctionDescriptor& f, const Rational& R, double x);

} // namespace fraclimit::rl
