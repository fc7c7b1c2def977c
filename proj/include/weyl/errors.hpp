#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Raised when an exact solver or enumeration exceeds its configured budget.
// Callers distinguish this from domain errors: a budget overrun is not a
// wrong input, it is a refusal to guess.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal consistency check fails (e.g. a reflection of a
// crystallographic root leaves the lattice). Indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace weyl
