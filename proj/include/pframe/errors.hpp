#pragma once

#include <stdexcept>
#include <string>

namespace pframe {

/// Bad runtime data: dimension mismatches, zero vectors, malformed files.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad parameters: exponents out of range, non-positive counts, invalid weights.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace pframe
