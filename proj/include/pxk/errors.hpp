#pragma once

#include <stdexcept>
#include <string>

namespace pxk {

// Raised for malformed or inconsistent input (bad files, invalid facet paths,
// precondition violations the caller can fix).  The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two independently computed results that must agree by theorem
// disagree.  This always signals an implementation bug, never bad input.
// The CLI maps this to exit code 2.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace pxk
