#pragma once

#include <stdexcept>
#include <string>

namespace mz {

enum class ErrorKind {
    ZeroInversion,
    CapMismatch,
    UnityTwist,
    NonRationalSum,
    NonUnit,
    DegenerateCell,
    UnsupportedC,
    NonIntegralValue,
    PreconditionViolation,
    ParityViolation,
    DomainViolation,
    BadAlpha,
    OutsideRegion,
    CostCeiling,
    InvalidArgument,
};

const char* kind_name(ErrorKind k);

// Every domain failure in the library is an mz::Error; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mz
