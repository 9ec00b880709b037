#include "octomaze/errors.hpp"

namespace octomaze {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::ParallelIncidence: return "ParallelIncidence";
    case ErrorCode::InvalidSlope: return "InvalidSlope";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::OverlappingSegments: return "OverlappingSegments";
    case ErrorCode::StartOnSegment: return "StartOnSegment";
    case ErrorCode::StartOutsideBBox: return "StartOutsideBBox";
    case ErrorCode::SegmentOutsideBBox: return "SegmentOutsideBBox";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotOnLattice: return "NotOnLattice";
    case ErrorCode::ConstructionInconsistency: return "ConstructionInconsistency";
    case ErrorCode::InvalidIET: return "InvalidIET";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AlreadyTotal: return "AlreadyTotal";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::OutOfConveyor: return "OutOfConveyor";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
  }
  return "Unknown";
}

}  // namespace octomaze
