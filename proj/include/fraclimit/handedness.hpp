#pragma once

namespace fraclimit {

// Which side the difference quotient samples from: Forward steps h > 0
// (samples below x), Reverse steps h < 0 (samples above x).
enum class Handedness { Forward, Reverse };

inline const char* to_string(Handedness h) {
    return h == Handedness::Forward ? "Forward" : "Reverse";
}

} // namespace fraclimit
