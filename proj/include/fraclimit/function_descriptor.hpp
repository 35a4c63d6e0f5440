#pragma once

#include <variant>
#include <vector>

namespace fraclimit {

// The function family both difference quotients and closed forms understand:
// monomials, explicit polynomials, and truncated Taylor polynomials of the
// classic transcendental seeds. Taylor kinds expand about 0 with terms up to
// degree K (so K+1 coefficient slots), K defaulting to 12.

struct Power {
    int m = 1;
};

struct Polynomial {
    std::vector<double> coeffs; // ascending degree
};

struct TaylorExp {
    int terms = 12;
};

struct TaylorSin {
    int terms = 12;
};

struct TaylorCos {
    int terms = 12;
};

using FunctionDescriptor = std::variant<Power, Polynomial, TaylorExp, TaylorSin, TaylorCos>;

// Ascending coefficient view; Power(m) becomes the unit vector of length m+1.
std::vector<double> to_coefficients(const FunctionDescriptor& f);

// Point evaluation: repeated squaring for Power, Horner on the coefficient
// view for everything else, so the difference quotient and the closed form
// always see the same function.
double evaluate_function(const FunctionDescriptor& f, double t);

bool is_taylor(const FunctionDescriptor& f);

} // namespace fraclimit
