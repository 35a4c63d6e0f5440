#include "fraclimit/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

#include "fraclimit/errors.hpp"

namespace fraclimit {

Rational::Rational(std::int64_t p, std::int64_t s) : num(p), den(s) {
    if (den == 0)
        throw ParameterError("rational denominator must be non-zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

double Rational::value() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

bool Rational::is_integer() const { return den == 1; }

bool Rational::odd_denominator() const { return (den % 2) != 0; }

Rational Rational::operator-() const { return Rational(-num, den); }

Rational Rational::subtract_from(std::int64_t m) const {
    return Rational(m * den - num, den);
}

namespace {

bool parse_i64(const std::string& s, std::int64_t& out) {
    if (s.empty())
        return false;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size())
        return false;
    out = v;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t p = 0;
        std::int64_t s = 0;
        if (!parse_i64(text.substr(0, slash), p) || !parse_i64(text.substr(slash + 1), s))
            throw ParameterError("cannot parse order '" + text + "' as p/s");
        if (s == 0)
            throw ParameterError("order '" + text + "' has zero denominator");
        return Rational(p, s);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string ip = text.substr(0, dot);
        const std::string fp = text.substr(dot + 1);
        if (fp.empty() || fp.size() > 17)
            throw ParameterError("cannot parse order '" + text + "' as a decimal");
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParameterError("cannot parse order '" + text + "' as a decimal");
        std::int64_t whole = 0;
        const bool neg = !ip.empty() && ip[0] == '-';
        const std::string ip_digits = (neg || (!ip.empty() && ip[0] == '+')) ? ip.substr(1) : ip;
        if (!ip_digits.empty() && !parse_i64(ip_digits, whole))
            throw ParameterError("cannot parse order '" + text + "' as a decimal");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i)
            scale *= 10;
        std::int64_t frac = 0;
        if (!parse_i64(fp, frac))
            throw ParameterError("cannot parse order '" + text + "' as a decimal");
        std::int64_t p = whole * scale + frac;
        if (neg)
            p = -p;
        return Rational(p, scale);
    }
    std::int64_t p = 0;
    if (!parse_i64(text, p))
        throw ParameterError("cannot parse order '" + text + "'");
    return Rational(p, 1);
}

std::string Rational::str() const {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

} // namespace fraclimit
