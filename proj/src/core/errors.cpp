#include "fracture/core/errors.hpp"

namespace fracture {

const char* code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Input: return "input";
    case ErrorCode::NoMorphism: return "no-morphism";
    case ErrorCode::NonTorsion: return "non-torsion";
    case ErrorCode::UndeclaredAdjunction: return "undeclared-adjunction";
    case ErrorCode::NonCommutingSquare: return "non-commuting-square";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::NonUnit: return "non-unit";
    case ErrorCode::UnknownDemo: return "unknown-demo";
    case ErrorCode::PrecisionExhausted: return "precision-exhausted";
    case ErrorCode::Truncation: return "truncation";
    case ErrorCode::TruncationUnstable: return "truncation-unstable";
    case ErrorCode::VerificationFailure: return "verification-failure";
    case ErrorCode::ReassemblyFailure: return "reassembly-failure";
    case ErrorCode::Mismatch: return "mismatch";
    }
    return "unknown";
}

int exit_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::VerificationFailure:
    case ErrorCode::ReassemblyFailure:
    case ErrorCode::Mismatch:
        return 1;
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::Truncation:
    case ErrorCode::TruncationUnstable:
        return 3;
    default:
        return 2;
    }
}

} // namespace fracture
