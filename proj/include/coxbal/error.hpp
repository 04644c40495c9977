#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxbal {

enum class ErrorKind {
    MalformedInput,
    NotFiniteType,
    MissingRootWeight,
    CapacityExceeded,
    NotAPermutation,
    IotaViolation,
    ThetaNotFull,
    NotFullQuotient,
    NotAnIdeal,
    NotSlim,
    FixedPointExists,
    LimitExceeded,
    BudgetExceeded,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::MissingRootWeight: return "MissingRootWeight";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::IotaViolation: return "IotaViolation";
    case ErrorKind::ThetaNotFull: return "ThetaNotFull";
    case ErrorKind::NotFullQuotient: return "NotFullQuotient";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotSlim: return "NotSlim";
    case ErrorKind::FixedPointExists: return "FixedPointExists";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string & message)
{
    throw Error(kind, message);
}

} // namespace coxbal
