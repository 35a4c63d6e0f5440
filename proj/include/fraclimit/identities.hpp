#pragma once

#include <cstdint>

namespace fraclimit::identities {

// sum_{k=0}^{N} C(R,k)(-1)^k by term recurrence with compensated accumulation.
double pascal_sum_brute(double R, std::int64_t N);

// (-1)^N C(R-1, N): the telescoped closed form of the same sum.
double pascal_closed(double R, std::int64_t N);

// sum_{k=0}^{N} C(R,k)(-1)^k k^j; j <= 8 (ParameterError beyond).
double moment_sum_brute(double R, std::int64_t N, int j);

// (-1)^N * R/(R-j) * C(R-1,N) * N^j, the large-N moment closed form.
// ParameterError when |R - j| < 1e-12. Exactly equals pascal_closed at j = 0.
double moment_closed_asymptotic(double R, std::int64_t N, int j);

// sum_{j=0}^{m} C(m,j)(-q)^j / (R-j). Integer R in {0..m} is a pole: refused.
double result2_lhs(int m, double R, double q);

// R^{-1} C(m-R over m)^{-1}: the q = 1 slice of result2_lhs.
double result3_closed(int m, double R);

// Asymptotic of (-1)^N C(R,N): -sin(pi R)/pi * Gamma(R+1) * N^{-R-1}.
// Exactly 0 for integer R >= 0 (the sum truncates); finite limit form for
// negative integer R where sin and the gamma pole cancel.
double asymptotic_pascal(double R, std::int64_t N);

// Asymptotic of C(m, R) for large upper slot: -sin(pi R)/pi * Gamma(-R) * m^R.
// ParameterError for integer R >= 0.
double asymptotic_binom_upper(double m, double R);

} // namespace fraclimit::identities
