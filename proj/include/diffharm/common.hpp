#ifndef DIFFHARM_COMMON_HPP
#define DIFFHARM_COMMON_HPP

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diffharm {

// Error categories map 1:1 to CLI exit codes (2/3/4).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

} // namespace diffharm

#endif
