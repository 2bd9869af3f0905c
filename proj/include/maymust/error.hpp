#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maymust {

enum class ErrorKind {
    DuplicateArgument,
    UnknownArgumentInAttack,
    MayExceedsMust,
    DomainMismatch,
    EmptyInput,
    UndefinedAttackerLabel,
    UndefinedArgumentLabel,
    FractionOrderViolation,
    InvalidFraction,
    NoMaximallyProper,
    NonConvergent,
    FrozenLabelMissing,
    SyntaxError,
    InvalidProbability,
    InstanceTooLarge,
    UnknownSemantics,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure carrying the 1-based line number of the offending declaration.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, const std::string& message)
        : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace maymust
