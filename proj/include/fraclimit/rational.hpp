#pragma once

#include <cstdint>
#include <string>

namespace fraclimit {

// Exact rational order p/s, always stored normalized: gcd(|p|, s) = 1, s > 0.
// Orders are kept exact so that branch decisions (odd vs even denominator)
// are well defined instead of hanging off floating-point round-off.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t p, std::int64_t s); // normalizes; throws ParameterError on s = 0

    double value() const;        // num/den as double
    bool is_integer() const;     // den == 1
    bool odd_denominator() const;
    Rational operator-() const;

    // m - R for integer m, exact (stays over the same denominator).
    Rational subtract_from(std::int64_t m) const;

    // "p/s" or decimal like "1.25" (denominator 10^d, then normalized) or "2".
    static Rational parse(const std::string& text);

    std::string str() const; // "p/s", or "p" when integral

    friend bool operator==(const Rational&, const Rational&) = default;
};

} // namespace fraclimit
