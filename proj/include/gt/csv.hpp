#pragma once

#include <cstdio>
#include <string>

namespace gt {

// 17 significant digits, dot decimal separator, round-trippable.
inline std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

} // namespace gt
