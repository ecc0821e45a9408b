#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace taxsim {

/// Raised by scenario validation and parsing. Carries every violation found
/// in one pass, each prefixed with the field path it concerns.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Raised when two schedule reports do not describe the same scenario and
/// horizon and therefore cannot be compared.
class ComparisonError : public std::runtime_error {
public:
    explicit ComparisonError(const std::string& message);
};

} // namespace taxsim
