#ifndef BAERMULT_ERRORS_HPP
#define BAERMULT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace baermult {

// One named precondition with its outcome; failures are reported, not hidden.
struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

class BaermultError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required hypothesis does not hold; carries every failed check.
class HypothesisError : public BaermultError {
public:
    explicit HypothesisError(std::string message, std::vector<NamedCheck> failed = {})
        : BaermultError(std::move(message)), failed_(std::move(failed)) {}

    const std::vector<NamedCheck>& failed_checks() const { return failed_; }

private:
    std::vector<NamedCheck> failed_;
};

// A configured size bound would be exceeded.
class ResourceError : public BaermultError {
public:
    using BaermultError::BaermultError;
};

// Misuse of the group engine (basis mismatch, cap too small, ...).
class EngineError : public BaermultError {
public:
    using BaermultError::BaermultError;
};

}  // namespace baermult

#endif
