#pragma once

#include <stdexcept>
#include <string>

namespace vircat {

/// A mathematical cross-check failed (oracle disagreement, non-integral
/// monodromy exponent, route mismatch, ...).  Distinct from domain errors
/// so callers can map it to a dedicated exit code.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vircat
