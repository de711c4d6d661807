#include "hyperplan/error.hpp"

namespace hyperplan {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
        case ErrorCode::InvalidPolygon: return "InvalidPolygon";
        case ErrorCode::SplitDisconnected: return "SplitDisconnected";
        case ErrorCode::SplitEmpty: return "SplitEmpty";
        case ErrorCode::RatioSplitInfeasible: return "RatioSplitInfeasible";
        case ErrorCode::HoleProduced: return "HoleProduced";
        case ErrorCode::NotBspRepresentable: return "NotBspRepresentable";
        case ErrorCode::ApplyFailed: return "ApplyFailed";
        case ErrorCode::InsufficientArea: return "InsufficientArea";
        case ErrorCode::NoCirculationEdge: return "NoCirculationEdge";
        case ErrorCode::TilingGap: return "TilingGap";
        case ErrorCode::TilingOverlap: return "TilingOverlap";
        case ErrorCode::UnknownProgram: return "UnknownProgram";
        case ErrorCode::DanglingDoor: return "DanglingDoor";
        case ErrorCode::AccessDisconnected: return "AccessDisconnected";
        case ErrorCode::NoSharedWall: return "NoSharedWall";
        case ErrorCode::RoomSetMismatch: return "RoomSetMismatch";
        case ErrorCode::InconsistentPair: return "InconsistentPair";
        case ErrorCode::TooFewSamples: return "TooFewSamples";
        case ErrorCode::UnknownOccupancy: return "UnknownOccupancy";
        case ErrorCode::MissingRoomScore: return "MissingRoomScore";
        case ErrorCode::InvalidRecord: return "InvalidRecord";
        case ErrorCode::EmptyCohort: return "EmptyCohort";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::VersionMismatch: return "VersionMismatch";
        case ErrorCode::UnitMismatch: return "UnitMismatch";
        case ErrorCode::IdMismatch: return "IdMismatch";
        case ErrorCode::EmptyLibrary: return "EmptyLibrary";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(detail) {}

bool is_domain_failure(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotBspRepresentable:
        case ErrorCode::SplitDisconnected:
        case ErrorCode::RatioSplitInfeasible:
        case ErrorCode::ApplyFailed:
        case ErrorCode::InsufficientArea:
        case ErrorCode::NoSharedWall:
            return true;
        default:
            return false;
    }
}

}  // namespace hyperplan
