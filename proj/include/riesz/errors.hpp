#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

// Bad input: precondition violations, out-of-domain arguments, malformed
// shape descriptions.  The CLI maps these to exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The computation itself failed: series did not converge, optimizer made
// no progress from any start, divergent integral requested.  Exit code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace riesz
