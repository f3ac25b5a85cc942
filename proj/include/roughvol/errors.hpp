#pragma once

#include <stdexcept>
#include <string>

namespace roughvol {

// Base class for all errors raised by this library.  The CLI maps the
// subcategories below onto distinct process exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, invalid parameter combinations.
struct ConfigError : Error {
    using Error::Error;
};

// Data violates a contract (ordering, size, positivity, ...).
struct DataError : Error {
    using Error::Error;
};

// A numerical routine could not produce a usable result.
struct NumericalError : Error {
    using Error::Error;
};

struct ParseError : ConfigError {
    using ConfigError::ConfigError;
};
struct InvalidSpec : ConfigError {
    using ConfigError::ConfigError;
};

struct OrderError : DataError {
    using DataError::DataError;
};
struct TooFewTicks : DataError {
    using DataError::DataError;
};
struct SeriesTooShort : DataError {
    using DataError::DataError;
};
struct NonPositiveVariogram : DataError {
    using DataError::DataError;
};
struct NonPositiveAcf : DataError {
    using DataError::DataError;
};
struct NonPositiveForecast : DataError {
    using DataError::DataError;
};
struct MisalignedRecords : DataError {
    using DataError::DataError;
};
struct DegenerateLosses : DataError {
    using DataError::DataError;
};

struct DomainError : NumericalError {
    using NumericalError::NumericalError;
};
struct UnsupportedFamily : NumericalError {
    using NumericalError::NumericalError;
};
struct CriticalGamma : NumericalError {
    using NumericalError::NumericalError;
};
struct RankDeficient : NumericalError {
    using NumericalError::NumericalError;
};
struct NotPositiveDefinite : NumericalError {
    using NumericalError::NumericalError;
};
struct SingularConditioning : NumericalError {
    using NumericalError::NumericalError;
};
struct OptimizerNoConverge : NumericalError {
    using NumericalError::NumericalError;
};
struct MleNoConverge : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace roughvol
