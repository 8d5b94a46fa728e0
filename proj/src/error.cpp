#include "kaleido/error.hpp"

namespace kaleido {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::HalfTooSmall: return "HalfTooSmall";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::NotASpecialCase: return "NotASpecialCase";
    case ErrorCode::SearchFailed: return "SearchFailed";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::PatchMismatch: return "PatchMismatch";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::NoCandidates: return "NoCandidates";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace kaleido
