#include "wrd/error.hpp"

namespace wrd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfBounds: return "OUT_OF_BOUNDS";
    case ErrorCode::WallOffLattice: return "WALL_OFF_LATTICE";
    case ErrorCode::RegionIdsNotDense: return "REGION_IDS_NOT_DENSE";
    case ErrorCode::RegionDisconnected: return "REGION_DISCONNECTED";
    case ErrorCode::RegionShapeMismatch: return "REGION_SHAPE_MISMATCH";
    case ErrorCode::LabelMultiplicity: return "LABEL_MULTIPLICITY";
    case ErrorCode::DuplicateTerminal: return "DUPLICATE_TERMINAL";
    case ErrorCode::NoLabels: return "NO_LABELS";
    case ErrorCode::InvalidLabel: return "INVALID_LABEL";
    case ErrorCode::DuplicateCircle: return "DUPLICATE_CIRCLE";
    case ErrorCode::InvalidNumber: return "INVALID_NUMBER";
    case ErrorCode::InvalidK: return "INVALID_K";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::InvalidSolution: return "INVALID_SOLUTION";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownField: return "UNKNOWN_FIELD";
    case ErrorCode::MissingField: return "MISSING_FIELD";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::MapInconsistent: return "MAP_INCONSISTENT";
    case ErrorCode::UnliftFailed: return "UNLIFT_FAILED";
  }
  return "UNKNOWN";
}

}  // namespace wrd
