#pragma once

#include <stdexcept>
#include <string>

namespace vad {

enum class ErrorCode {
    EmptyCloud,
    DegenerateCloud,
    DegenerateInput,
    ParseError,
    IoError,
    DuplicateIndex,
    IndexOutOfRange,
    BudgetTooSmall,
    ZeroVector,
    OutOfDomain,
    SolverDiverged,
    EmptyZeroSet,
    NonFiniteEnergy,
    PropagationStalled,
    IsoOutOfRange,
    DegenerateIso,
    LengthMismatch,
    EmptyInput,
    EmptyMesh,
    InvalidConfig,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace vad
