#include "fraclimit/identities.hpp"

#include <cmath>
#include <string>

#include "fraclimit/errors.hpp"
#include "fraclimit/specfun.hpp"
#include "fraclimit/summation.hpp"

namespace fraclimit::identities {

namespace {

constexpr double kIntegerTol = 1e-12;

// Exact small-exponent power by repeated multiplication.
double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

void require_noninteger_in(double R, int lo, int hi, const char* who) {
    const double n = std::nearbyint(R);
    if (std::fabs(R - n) < kIntegerTol && n >= lo && n <= hi)
        throw ParameterError(std::string(who) + ": integer R = " + std::to_string(R) +
                             " is a pole of the j-sum");
}

} // namespace

double pascal_sum_brute(double R, std::int64_t N) {
    CompensatedSum acc;
    double t = 1.0; // C(R,0)(-1)^0
    for (std::int64_t k = 0;; ++k) {
        acc.add(t);
        if (k == N)
            break;
        t *= (static_cast<double>(k) - R) / static_cast<double>(k + 1);
    }
    return acc.value();
}

double pascal_closed(double R, std::int64_t N) {
    const double c = specfun::binomial_general(R - 1.0, N);
    return (N % 2 != 0) ? -c : c;
}

double moment_sum_brute(double R, std::int64_t N, int j) {
    if (j < 0 || j > 8)
        throw ParameterError("moment_sum_brute: j = " + std::to_string(j) +
                             " outside supported range 0..8");
    CompensatedSum acc;
    double t = 1.0;
    for (std::int64_t k = 0;; ++k) {
        acc.add(t * ipow(static_cast<double>(k), j));
        if (k == N)
            break;
        t *= (static_cast<double>(k) - R) / static_cast<double>(k + 1);
    }
    return acc.value();
}

double moment_closed_asymptotic(double R, std::int64_t N, int j) {
    if (std::fabs(R - static_cast<double>(j)) < kIntegerTol)
        throw ParameterError("moment_closed_asymptotic undefined at R = j = " + std::to_string(j));
    // For j = 0 the prefactor and power are exactly 1, so this degrades to
    // pascal_closed bit-for-bit.
    const double prefactor = R / (R - static_cast<double>(j));
    return prefactor * pascal_closed(R, N) * ipow(static_cast<double>(N), j);
}

double result2_lhs(int m, double R, double q) {
    if (m < 0)
        throw ParameterError("result2_lhs requires m >= 0");
    require_noninteger_in(R, 0, m, "result2_lhs");
    CompensatedSum acc;
    double binom = 1.0; // C(m,0)
    double qpow = 1.0;  // (-q)^0
    for (int j = 0; j <= m; ++j) {
        acc.add(binom * qpow / (R - static_cast<double>(j)));
        binom *= static_cast<double>(m - j) / static_cast<double>(j + 1);
        qpow *= -q;
    }
    return acc.value();
}

double result3_closed(int m, double R) {
    if (m < 0)
        throw ParameterError("result3_closed requires m >= 0");
    require_noninteger_in(R, 0, m, "result3_closed");
    const double b = specfun::binomial_real_real(static_cast<double>(m) - R,
                                                 static_cast<double>(m));
    if (b == 0.0)
        throw ParameterError("result3_closed: C(m-R, m) vanished at m = " + std::to_string(m) +
                             ", R = " + std::to_string(R));
    return 1.0 / (R * b);
}

double asymptotic_pascal(double R, std::int64_t N) {
    const double n = std::nearbyint(R);
    const double Nd = static_cast<double>(N);
    if (std::fabs(R - n) < kIntegerTol) {
        if (n >= 0.0)
            return 0.0; // the binomial column is eventually exactly zero
        // Negative integer order: sin and the gamma pole cancel; take the
        // reflected limit -R/Gamma(1-R) * N^{-R-1}.
        return -R / specfun::gamma(1.0 - R) * std::pow(Nd, -R - 1.0);
    }
    return -specfun::sinpi(R) / M_PI * specfun::gamma(R + 1.0) * std::pow(Nd, -R - 1.0);
}

double asymptotic_binom_upper(double m, double R) {
    const double n = std::nearbyint(R);
    if (std::fabs(R - n) < kIntegerTol && n >= 0.0)
        throw ParameterError("asymptotic_binom_upper undefined for integer R = " +
                             std::to_string(R));
    return -specfun::sinpi(R) / M_PI * specfun::gamma(-R) * std::pow(m, R);
}

} // namespace fraclimit::identities
