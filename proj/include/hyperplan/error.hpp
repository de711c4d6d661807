#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperplan {

enum class ErrorCode {
    DegenerateGeometry,
    InvalidPolygon,
    SplitDisconnected,
    SplitEmpty,
    RatioSplitInfeasible,
    HoleProduced,
    NotBspRepresentable,
    ApplyFailed,
    InsufficientArea,
    NoCirculationEdge,
    TilingGap,
    TilingOverlap,
    UnknownProgram,
    DanglingDoor,
    AccessDisconnected,
    NoSharedWall,
    RoomSetMismatch,
    InconsistentPair,
    TooFewSamples,
    UnknownOccupancy,
    MissingRoomScore,
    InvalidRecord,
    EmptyCohort,
    ParseError,
    VersionMismatch,
    UnitMismatch,
    IdMismatch,
    EmptyLibrary,
};

std::string_view error_code_name(ErrorCode code);

// Every failure the library reports carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

// True for failures caused by the input plan or hypergraph being outside the
// domain of the method (as opposed to malformed input).
bool is_domain_failure(ErrorCode code);

}  // namespace hyperplan
