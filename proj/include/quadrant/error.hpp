#pragma once

#include <stdexcept>
#include <string>

namespace quadrant {

/// Malformed user input: cycle strings, family names, flag values.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition on group data was violated (caps, containment, parents).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two routes that must agree did not. Always an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace quadrant
