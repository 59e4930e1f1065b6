#ifndef TDEG_ERRORS_HPP
#define TDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tdeg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input / format problems (CLI exit code 2).
struct ParseError : Error {
    using Error::Error;
};

// Resource limits (CLI exit code 3).
struct BudgetExceeded : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};
struct NotRegularAtZero : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct DimensionOverflow : BudgetExceeded {
    using BudgetExceeded::BudgetExceeded;
};
struct InvalidParameter : Error {
    using Error::Error;
};
struct InfiniteDimensional : Error {
    using Error::Error;
};
struct NotBindingWitness : Error {
    using Error::Error;
};
struct NotInvertibleElement : Error {
    using Error::Error;
};
struct NotUnital : Error {
    using Error::Error;
};
struct NotADegeneration : Error {
    using Error::Error;
};
struct PipelineAssertionFailed : Error {
    using Error::Error;
};
struct BadPrime : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct RuleNotApplicable : Error {
    using Error::Error;
};
struct DependentBasis : Error {
    using Error::Error;
};
struct CertificateInvalid : Error {
    using Error::Error;
};

} // namespace tdeg

#endif // TDEG_ERRORS_HPP
