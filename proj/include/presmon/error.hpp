#pragma once

#include <stdexcept>
#include <string>

namespace presmon {

/// Error type for all rejected inputs and violated preconditions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

} // namespace presmon
