#pragma once

#include <stdexcept>
#include <string>

namespace linkhom {

// Root of everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed caller input. Recoverable: fix the input and retry.
struct InvalidInput : Error {
    using Error::Error;
};

struct NonPositiveWeight : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NonPrimitive : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct WeightExceedsDegree : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct WrongVariant : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct CapExceeded : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct SubsetLimitExceeded : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct EmptyInput : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct UnknownFormat : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A convention of the exact-arithmetic algorithms was violated. Never a
// valid outcome for well-formed input; indicates a bug or corrupt data.
struct ConventionViolation : Error {
    using Error::Error;
};

struct InexactDivision : ConventionViolation {
    using ConventionViolation::ConventionViolation;
};

struct NonIntegerBetti : ConventionViolation {
    using ConventionViolation::ConventionViolation;
};

}  // namespace linkhom
