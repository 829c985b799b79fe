#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace cfm {

/// Shortest decimal representation that round-trips the double exactly.
inline std::string format_shortest(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

/// Fixed six decimal places (correctly rounded).
inline std::string format_fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace cfm
