#pragma once

#include <stdexcept>
#include <string>

namespace gpd {

// Structural input problems: unknown ids, malformed files, non-total maps.
// The CLI maps these to exit code 2.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematical failures: violated preconditions, contradictions during
// closure, failed constructions.  The CLI maps these to exit code 1.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpd
