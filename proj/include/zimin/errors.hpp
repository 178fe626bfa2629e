// errors.hpp -- error types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace zimin {

/// Raised when an enumeration or construction would exceed its size budget.
class size_error : public std::runtime_error {
public:
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an iterative bound computation fails to reach the requested
/// tolerance within its iteration cap.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zimin
