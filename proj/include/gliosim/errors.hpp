#ifndef GLIOSIM_ERRORS_HPP
#define GLIOSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gliosim {

// Bad input data: unreadable files, malformed formats, invalid configuration.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdown: non-finite values, overflow during iteration.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gliosim

#endif
