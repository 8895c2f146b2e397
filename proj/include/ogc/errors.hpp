#ifndef OGC_ERRORS_HPP
#define OGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ogc {

enum class ErrorCode {
    Loop,
    SymmetricArcPair,
    DuplicateArc,
    VertexOutOfRange,
    ParseError,
    InstanceTooLarge,
    Disconnected,
    NotATournament,
    ConstructionFailed,
    BadPartition,
    StableNotMaximal,
    CliqueTooSmall,
    BadParameter,
    NotBipartite,
    LabelingNotIsometric,
    InvalidInstance,
    NotGeodetic,
    NotACactus,
    NotATree,
    CycleIsTSC,
    UsageError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Loop: return "Loop";
        case ErrorCode::SymmetricArcPair: return "SymmetricArcPair";
        case ErrorCode::DuplicateArc: return "DuplicateArc";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NotATournament: return "NotATournament";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
        case ErrorCode::BadPartition: return "BadPartition";
        case ErrorCode::StableNotMaximal: return "StableNotMaximal";
        case ErrorCode::CliqueTooSmall: return "CliqueTooSmall";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::LabelingNotIsometric: return "LabelingNotIsometric";
        case ErrorCode::InvalidInstance: return "InvalidInstance";
        case ErrorCode::NotGeodetic: return "NotGeodetic";
        case ErrorCode::NotACactus: return "NotACactus";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::CycleIsTSC: return "CycleIsTSC";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

/// Library-wide exception type; `code()` identifies the failed contract.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace ogc

#endif
