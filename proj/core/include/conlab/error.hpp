#pragma once

#include <stdexcept>
#include <string>

namespace conlab {

// Every error the engine can raise, with a stable machine-readable code.
enum class ErrorKind {
    EmptyGenerators,
    NotCoprime,
    NotAMember,
    TruncationTooSmall,
    UnknownPreset,
    InvalidParametrization,
    MalformedCurve,
    InternalInconsistency,
    BadInput,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    const char* code() const {
        switch (kind_) {
        case ErrorKind::EmptyGenerators: return "empty_generators";
        case ErrorKind::NotCoprime: return "not_coprime";
        case ErrorKind::NotAMember: return "not_a_member";
        case ErrorKind::TruncationTooSmall: return "truncation_too_small";
        case ErrorKind::UnknownPreset: return "unknown_preset";
        case ErrorKind::InvalidParametrization: return "invalid_parametrization";
        case ErrorKind::MalformedCurve: return "malformed_curve";
        case ErrorKind::InternalInconsistency: return "internal_inconsistency";
        case ErrorKind::BadInput: return "bad_input";
        }
        return "unknown";
    }

private:
    ErrorKind kind_;
};

} // namespace conlab
