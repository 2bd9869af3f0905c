#include "maymust/error.hpp"

namespace maymust {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DuplicateArgument: return "DuplicateArgument";
        case ErrorKind::UnknownArgumentInAttack: return "UnknownArgumentInAttack";
        case ErrorKind::MayExceedsMust: return "MayExceedsMust";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::UndefinedAttackerLabel: return "UndefinedAttackerLabel";
        case ErrorKind::UndefinedArgumentLabel: return "UndefinedArgumentLabel";
        case ErrorKind::FractionOrderViolation: return "FractionOrderViolation";
        case ErrorKind::InvalidFraction: return "InvalidFraction";
        case ErrorKind::NoMaximallyProper: return "NoMaximallyProper";
        case ErrorKind::NonConvergent: return "NonConvergent";
        case ErrorKind::FrozenLabelMissing: return "FrozenLabelMissing";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::InvalidProbability: return "InvalidProbability";
        case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorKind::UnknownSemantics: return "UnknownSemantics";
    }
    return "Error";
}

}  // namespace maymust
