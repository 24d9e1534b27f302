#pragma once

#include <stdexcept>
#include <string>

namespace pmod {

// Input/precondition failures surfaced to the CLI as exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force interleaving search space above the configured cap (exit code 3).
// Never degrades silently: an oracle that cannot decide must say so.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// induced_matching_onto/into called outside a surjective/injective context.
struct GroupSizeViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct NotASubset : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidWitness : ValidationError {
    using ValidationError::ValidationError;
};

struct InfiniteBar : ValidationError {
    using ValidationError::ValidationError;
};

struct EndpointNotInL : ValidationError {
    using ValidationError::ValidationError;
};

struct RefinementTooLarge : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace pmod
