#pragma once

#include <stdexcept>
#include <string>

namespace hyperzeta {

/// Coarse classification used by the command-line front end to pick an exit code.
enum class ErrorKind {
    domain,     // caller supplied parameters outside an operation's domain
    precision,  // a numerical target could not be met
    fit,        // asymptotic fit did not stabilise
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message, std::string parameter = {})
        : std::runtime_error(message), kind_(kind), code_(std::move(code)), parameter_(std::move(parameter)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }
    const std::string& parameter() const noexcept { return parameter_; }

private:
    ErrorKind kind_;
    std::string code_;
    std::string parameter_;
};

#define HYPERZETA_DEFINE_ERROR(Name, Kind)                                               \
    class Name : public Error {                                                          \
    public:                                                                              \
        explicit Name(const std::string& message, std::string parameter = {})            \
            : Error(ErrorKind::Kind, #Name, message, std::move(parameter)) {}            \
    }

HYPERZETA_DEFINE_ERROR(InvalidParameter, domain);
HYPERZETA_DEFINE_ERROR(DomainError, domain);
HYPERZETA_DEFINE_ERROR(IndexError, domain);
HYPERZETA_DEFINE_ERROR(DivisionByZeroSeries, domain);
HYPERZETA_DEFINE_ERROR(TooCloseToInteger, domain);
HYPERZETA_DEFINE_ERROR(PolesTooClose, domain);
HYPERZETA_DEFINE_ERROR(PrecisionUnreachable, precision);
HYPERZETA_DEFINE_ERROR(NodeBudgetExceeded, precision);
HYPERZETA_DEFINE_ERROR(ConvergenceTooSlow, precision);
HYPERZETA_DEFINE_ERROR(FitUnstable, fit);

#undef HYPERZETA_DEFINE_ERROR

}  // namespace hyperzeta
