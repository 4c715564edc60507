#pragma once

#include <cstdio>
#include <string>

namespace plflow::detail {

// Shortest text that always round-trips a double: 17 significant digits.
inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace plflow::detail
