#pragma once

#include <stdexcept>
#include <string>

namespace symint {

enum class ErrorKind {
    DependentGenerators,
    InfiniteIndex,
    DimensionMismatch,
    NotPositiveSystem,
    SizeCapExceeded,
    ParityViolation,
    NotARootSystem,
    NoSolution,
    CountMismatch,
    FormulaMismatch,
    EmptySimpleSet,
    BadParameters,
    InvolutionInvalid,
    IncompatiblePositiveSystem,
    InvalidProfile,
    InvalidDescriptor,
};

const char* kind_name(ErrorKind k);

// CountMismatch / FormulaMismatch mean the engine contradicted itself,
// not that the input was bad.
inline bool is_consistency_failure(ErrorKind k) {
    return k == ErrorKind::CountMismatch || k == ErrorKind::FormulaMismatch;
}

class EngineError : public std::runtime_error {
public:
    EngineError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace symint
