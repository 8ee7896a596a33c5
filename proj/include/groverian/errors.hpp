#pragma once

#include <stdexcept>
#include <string>

namespace groverian {

// Raised for unreadable or malformed input files (CLI exit code 2).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised for invalid configuration: bad flag values, unsupported sizes,
// method/state incompatibilities (CLI exit code 3).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace groverian
