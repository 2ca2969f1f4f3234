#pragma once

#include <charconv>
#include <string>

namespace qstep {

/// Shortest decimal representation that round-trips the double exactly.
/// Locale-independent by construction (std::to_chars).
inline std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace qstep
