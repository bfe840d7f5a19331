#pragma once

#include <stdexcept>
#include <string>

namespace splitplan {

// Error classes map 1:1 onto CLI exit codes; see exit_code_for().
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or non-finite numeric input (non-Hermitian matrix, NaN entries, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

// File could not be parsed into a valid domain object.
struct ParseError : Error {
    using Error::Error;
};

// A theorem/corollary precondition does not hold for the given inputs.
struct ApplicabilityError : Error {
    using Error::Error;
};

// A bound that is guaranteed analytically was violated numerically.
struct VerificationError : Error {
    using Error::Error;
};

// Request exceeds the configured size limits (order cap, matrix dimension).
struct ResourceError : Error {
    using Error::Error;
};

// Too few usable data points for a fit.
struct InsufficientDataError : Error {
    using Error::Error;
};

enum ExitCode : int {
    kExitOk = 0,
    kExitGeneric = 1,
    kExitParse = 2,
    kExitApplicability = 3,
    kExitVerification = 4,
    kExitResource = 5,
};

}  // namespace splitplan
