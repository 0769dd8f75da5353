#pragma once

#include <stdexcept>
#include <string>

namespace fracture {

enum class ErrorCode {
    Input,
    NoMorphism,
    NonTorsion,
    UndeclaredAdjunction,
    NonCommutingSquare,
    Precondition,
    NonUnit,
    UnknownDemo,
    PrecisionExhausted,
    Truncation,
    TruncationUnstable,
    VerificationFailure,
    ReassemblyFailure,
    Mismatch,
};

const char* code_name(ErrorCode code);

// Process exit status the CLI reports for an error of this code.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
    if (!cond) throw Error(code, message);
}

} // namespace fracture
