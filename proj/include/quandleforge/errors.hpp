#pragma once

#include <stdexcept>
#include <string>

namespace qf {

// Malformed or inconsistent input data (unreadable files, non-square tables,
// out-of-range ids, mismatched signatures between inputs). Maps to CLI exit 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A structurally well-formed object violating a domain constraint (axiom
// failures surfaced as exceptions, family parameter violations, internal
// consistency failures). Maps to CLI exit 1.
class constraint_error : public std::runtime_error {
public:
    explicit constraint_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qf
