#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad rational strings, wrong JSON shape, missing fields.
struct parse_error : error {
    using error::error;
};

// Operands of incompatible sizes or signatures.
struct dimension_error : error {
    using error::error;
};

// Dependent "basis" input, isotropic reflector, division by zero.
struct singular_error : error {
    using error::error;
};

// A matrix that fails Q^t A Q = A (resp. M^t G M = G over a basis).
struct orthogonality_error : error {
    using error::error;
};

// Breach of an internal invariant; never expected on valid input.
struct internal_error : error {
    using error::error;
};

} // namespace cartan
