#pragma once

#include <stdexcept>
#include <string>

namespace qstep {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input outside the physical domain (no propagating channel, bad angle, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Operation requested on the wrong side of the critical angle.
struct RegimeError : Error {
    explicit RegimeError(const std::string& msg) : Error(msg) {}
};

/// The 4x4 matching system has no unique solution.
struct SingularMatching : Error {
    explicit SingularMatching(const std::string& msg) : Error(msg) {}
};

/// Closed-form reflection denominator collapsed below 1e-14.
struct DegenerateDenominator : Error {
    explicit DegenerateDenominator(const std::string& msg) : Error(msg) {}
};

/// Lateral shift diverges at critical incidence.
struct CriticalDivergence : Error {
    explicit CriticalDivergence(const std::string& msg) : Error(msg) {}
};

}  // namespace qstep
