#pragma once

#include <stdexcept>
#include <string>

namespace algch {

/// Raised for contract violations: malformed input, dimension mismatch,
/// failed preconditions. Carries a human-readable message only.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace algch
