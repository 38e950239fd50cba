#pragma once

#include <stdexcept>
#include <string>

namespace fusrep {

// Input violates a stated precondition (bad function file, unsaturated
// fusion where saturation is required, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree / order / enumeration bound exceeded.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid input (non-normal subgroup passed to a quotient,
// non-p-group Sylow candidate, ...).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates an implementation bug.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A proved theorem failed on a concrete instance; always an
// implementation bug, serialized with full inputs for reproduction.
struct FalsificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fusrep
