#pragma once

#include <stdexcept>

namespace specht {

// Malformed caller input: bad partitions, shape or degree mismatches, values
// outside a declared domain.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured enumeration / term / dimension budget would be exceeded.
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed. Never expected on any input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace specht
