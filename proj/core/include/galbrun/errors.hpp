#pragma once

#include <stdexcept>
#include <string>

namespace galbrun {

// Structural misuse of the library API (mismatched grids, bad arguments).
class structural_error : public std::invalid_argument {
public:
    explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

// Invalid or inconsistent run configuration. CLI maps this to exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Mid-run failure (non-finite state, solver breakdown, path escape, I/O).
// CLI maps this to exit code 3.
class runtime_abort : public std::runtime_error {
public:
    explicit runtime_abort(const std::string& what) : std::runtime_error(what) {}
};

} // namespace galbrun
