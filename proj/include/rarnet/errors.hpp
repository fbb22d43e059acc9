#ifndef RARNET_ERRORS_HPP
#define RARNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rarnet {

/// Malformed or unusable input (files, flags, model documents). CLI exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during fitting (rank deficiency, impossible system). CLI exit code 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rarnet

#endif
