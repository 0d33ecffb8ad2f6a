#pragma once

// Deterministic rendering helpers: floats are fixed at 12 significant
// digits everywhere output leaves the library, so identical invocations
// produce byte-identical tables and JSON.

#include <cstdio>
#include <cstdlib>
#include <string>

namespace semigap::io {

inline std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Round a double to 12 significant digits so JSON number rendering is
// stable across identical runs and platforms.
inline double round12(double x) {
    return std::strtod(fmt12(x).c_str(), nullptr);
}

} // namespace semigap::io
