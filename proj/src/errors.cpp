#include "taxsim/errors.hpp"

namespace taxsim {

namespace {

std::string join(const std::vector<std::string>& violations) {
    std::string out;
    for (const std::string& v : violations) {
        if (!out.empty()) {
            out += "; ";
        }
        out += v;
    }
    return out.empty() ? std::string("scenario invalid") : out;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

ComparisonError::ComparisonError(const std::string& message)
    : std::runtime_error("cannot compare reports: " + message) {}

} // namespace taxsim
