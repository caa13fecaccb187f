#pragma once

#include <stdexcept>
#include <string>

namespace bethe {

// Malformed user input (bad rational literal, bad chain spec).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside the domain of an operation.
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace bethe
