#include "fraclimit/cli_config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace fraclimit::cli {

namespace {

// Splits at the first ':'; the second element is empty when there is none.
std::pair<std::string, std::string> split_head(const std::string& spec) {
    auto pos = spec.find(':');
    if (pos == std::string::npos) return {spec, std::string{}};
    return {spec.substr(0, pos), spec.substr(pos + 1)};
}

std::vector<std::string> split_all(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double_strict(const std::string& text, const std::string& context) {
    if (text.empty()) throw ConfigError(context + ": empty number");
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
        throw ConfigError(context + ": invalid number '" + text + "'");
    return v;
}

std::int64_t parse_int_strict(const std::string& text, const std::string& context) {
    if (text.empty()) throw ConfigError(context + ": empty integer");
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || errno == ERANGE)
        throw ConfigError(context + ": invalid integer '" + text + "'");
    return static_cast<std::int64_t>(v);
}

int parse_taylor_terms(const std::string& arg, const std::string& name) {
    if (arg.empty()) return 12;
    auto terms = parse_int_strict(arg, name);
    if (terms < 1 || terms > 64)
        throw ConfigError(name + ": term count must be in [1, 64], got " + arg);
    return static_cast<int>(terms);
}

} // namespace

FunctionDescriptor parse_function(const std::string& spec) {
    auto [head, arg] = split_head(spec);
    if (head == "power") {
        if (arg.empty()) throw ConfigError("power: missing exponent, expected power:<m>");
        auto m = parse_int_strict(arg, "power");
        if (m < 0 || m > 64) throw ConfigError("power: exponent must be in [0, 64], got " + arg);
        return Power{static_cast<int>(m)};
    }
    if (head == "poly") {
        if (arg.empty()) throw ConfigError("poly: missing coefficients, expected poly:c0,c1,...");
        Polynomial p;
        for (const auto& piece : split_all(arg, ','))
            p.coeffs.push_back(parse_double_strict(piece, "poly"));
        return p;
    }
    if (head == "taylor-exp") return TaylorExp{parse_taylor_terms(arg, "taylor-exp")};
    if (head == "taylor-sin") return TaylorSin{parse_taylor_terms(arg, "taylor-sin")};
    if (head == "taylor-cos") return TaylorCos{parse_taylor_terms(arg, "taylor-cos")};
    throw ConfigError("unknown function family '" + head +
                      "' (expected power, poly, taylor-exp, taylor-sin, taylor-cos)");
}

Rational parse_order(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("order: ") + e.what());
    }
}

std::vector<std::int64_t> parse_schedule(const std::string& spec) {
    auto parts = split_all(spec, ':');
    if (parts.size() == 1) {
        auto n = parse_int_strict(parts[0], "schedule");
        if (n < 1) throw ConfigError("schedule: N must be >= 1, got " + parts[0]);
        return {n};
    }
    if (parts.size() != 3)
        throw ConfigError("schedule: expected '<N>' or '<a>:<b>:<g>', got '" + spec + "'");
    auto a = parse_int_strict(parts[0], "schedule start");
    auto b = parse_int_strict(parts[1], "schedule end");
    double g = parse_double_strict(parts[2], "schedule growth");
    if (a < 1) throw ConfigError("schedule: start must be >= 1");
    if (b < a) throw ConfigError("schedule: end must be >= start");
    if (g <= 1.0) throw ConfigError("schedule: growth factor must be > 1");
    std::vector<std::int64_t> out;
    for (int i = 0;; ++i) {
        double scaled = static_cast<double>(a) * std::pow(g, i);
        if (scaled > static_cast<double>(b) + 0.5) break;
        auto n = static_cast<std::int64_t>(std::llround(scaled));
        if (n > b) break;
        if (out.empty() || n > out.back()) out.push_back(n);
        if (i > 4096) throw ConfigError("schedule: too many entries");
    }
    if (out.empty()) throw ConfigError("schedule: produced no entries");
    return out;
}

std::pair<double, double> parse_interval(const std::string& spec) {
    auto parts = split_all(spec, ':');
    if (parts.size() != 2)
        throw ConfigError("interval: expected '<lo>:<hi>', got '" + spec + "'");
    double lo = parse_double_strict(parts[0], "interval lo");
    double hi = parse_double_strict(parts[1], "interval hi");
    if (!(lo < hi)) throw ConfigError("interval: require lo < hi");
    return {lo, hi};
}

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

unsigned thread_cap_from_env() {
    const char* raw = std::getenv("FRACLIMIT_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || errno == ERANGE || v < 1)
        throw ConfigError(std::string("FRACLIMIT_THREADS: invalid value '") + raw + "'");
    return static_cast<unsigned>(v);
}

} // namespace fraclimit::cli
