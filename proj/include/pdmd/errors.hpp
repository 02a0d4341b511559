#pragma once

#include <stdexcept>
#include <string>

namespace pdmd {

/// File or format problem: missing file, malformed CSV/JSON, schema violation.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure: divergence, singularity, rank deficiency.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using WarningHandler = void (*)(const std::string&);

/// Install a warning sink. nullptr silences warnings. The default prints to stderr.
void set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

namespace detail {

inline void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

}  // namespace detail
}  // namespace pdmd
