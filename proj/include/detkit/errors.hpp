#ifndef DETKIT_ERRORS_HPP
#define DETKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace detkit {

// Malformed user input (polynomial syntax, inhomogeneous forms, bad flags).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured search/enumeration budget was exceeded.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation on an otherwise well-formed call.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// The degree-escalation loop hit its hard cap.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace detkit

#endif
