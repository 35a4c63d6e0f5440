#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fraclimit/function_descriptor.hpp"
#include "fraclimit/rational.hpp"

namespace fraclimit::cli {

// Usage-level failure (bad flag syntax, malformed specs): exit code 2,
// distinct from the numeric-domain family's exit code 3.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "power:2", "poly:0,1,3.5", "taylor-exp:12", "taylor-sin", "taylor-cos:8".
// Taylor truncations default to 12 when omitted.
FunctionDescriptor parse_function(const std::string& spec);

// Order as exact rational: "p/s" or decimal (denominator 10^d, normalized).
Rational parse_order(const std::string& text);

// "4096" (single entry) or "a:b:g" (geometric from a while <= b, rounded).
std::vector<std::int64_t> parse_schedule(const std::string& spec);

// "lo:hi" with lo < hi.
std::pair<double, double> parse_interval(const std::string& spec);

// 17 significant digits, enough to round-trip any double, C locale.
std::string format_g17(double v);

// FRACLIMIT_THREADS (integer >= 1) caps sweep parallelism; 0 = unset/auto.
unsigned thread_cap_from_env();

} // namespace fraclimit::cli
