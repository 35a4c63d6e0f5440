#pragma once

#include <cstdint>

#include "fraclimit/rational.hpp"

namespace fraclimit::specfun {

// Magnitude-in-log-space scalar with explicit sign, for quantities like
// generalized binomials at k ~ 1e7 whose magnitudes overflow plain doubles
// long before their ratios do. sign == 0 encodes an exact zero.
struct SignedLogValue {
    double log_magnitude = 0.0;
    int sign = 0;

    double reconstruct() const;
};

// sin(pi*z) with argument reduction to the nearest integer, so the result
// stays fully accurate for |z| far beyond where sin(M_PI*z) degrades.
double sinpi(double z);

// Gamma function, Lanczos rational approximation plus reflection for z < 0.5.
// Throws PoleError within 1e-12 of a non-positive integer.
double gamma(double z);

// log|Gamma(z)| and sign(Gamma(z)); same pole contract as gamma().
SignedLogValue log_gamma_signed(double z);

// Generalized binomial alpha over k, integer k >= 0, any real alpha.
// Forward product recurrence for moderate k, log-space gamma ratio beyond.
double binomial_general(double alpha, std::int64_t k);

// Binomial with both slots real: Gamma(m+1) / (Gamma(R+1) Gamma(m-R+1)).
// A pole in either denominator gamma gives 0 (reciprocal-gamma limit);
// a pole in Gamma(m+1) itself throws PoleError.
double binomial_real_real(double m, double R);

// pi*R / sin(pi*R); 1 at R = 0; SingularError at non-zero integers.
double reflection_rhs(double R);

// Real-branch power q^R for exact rational R. Negative q requires an odd
// denominator (BranchError otherwise); q = 0 requires R >= 0 (0^0 = 1).
double real_branch_power(double q, const Rational& R);

// Terminating 2F1(-m, -R; 1-R; q), summed by term recurrence. Integer R in
// {0..m} makes the lower-parameter Pochhammer vanish against termination and
// is refused with ParameterError.
double hyp2f1_terminating(int m, double R, double q);

} // namespace fraclimit::specfun
