#pragma once

#include <string>
#include <vector>

#include "fraclimit/handedness.hpp"
#include "fraclimit/rational.hpp"

namespace fraclimit::charpoly {

// Admissible coupling constants are the real roots of the characteristic
// residuals below; q = 1 is a root for every order and every power, a
// tangent one on the positive axis for the linear equation.

struct CharacteristicRoot {
    double q = 0.0;
    double residual = 0.0;
    Handedness handedness = Handedness::Forward; // Forward iff q > 0 (x > 0 frame)
    std::string branch_note;                     // "positive axis" or "real branch (odd denominator)"
};

struct RootSearchOptions {
    double lo = -64.0;
    double hi = 64.0;
    int grid_points = 1 << 16;
    double residual_tol = 1e-10; // bisection stops when |residual| drops below
    double width_tol = 1e-13;    // ... or the bracket narrows below
    double dedup_tol = 1e-8;
};

// q^R - R q + (R - 1), the linear-function characteristic residual.
// Negative q needs an odd-denominator order (BranchError else).
double char_linear_residual(double q, const Rational& R);

// q^{-R} sum_{j<=m} C(m,j)(-q)^j/(R-j)  -  (pi/sin pi R) C(m,R).
double char_power_residual_sum(double q, const Rational& R, int m);

// q^{-R} 2F1(-m,-R;1-R;q)  -  (pi R/sin pi R) C(m,R). Equals R times the sum
// form wherever both are defined.
double char_power_residual_hyp(double q, const Rational& R, int m);

// Grid scan + bisection over [lo, hi], the positive side opening at 1e-6 and
// the negative side searched only for odd-denominator orders. q = 1 is always
// tested explicitly (tangency makes grids blind to it) and included when it
// lies inside the interval. Roots come back deduplicated and ascending.
std::vector<CharacteristicRoot> find_roots(const Rational& R, int m,
                                           const RootSearchOptions& options = {});

// |C(m-R over m)^{-1} - (pi R/sin pi R) C(m,R)|: the q = 1 closed-form
// identity residual, both sides evaluated through the gamma layer.
// ParameterError for integer R.
double verify_q1_identity(int m, const Rational& R);

} // namespace fraclimit::charpoly
