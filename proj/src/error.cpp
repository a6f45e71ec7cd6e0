#include "orbk/error.hpp"

namespace orbk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NonInvertibleGenerator: return "NonInvertibleGenerator";
    case ErrorCode::NonEffectiveAction: return "NonEffectiveAction";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotSL: return "NotSL";
    case ErrorCode::NonAbelian: return "NonAbelian";
    case ErrorCode::TrivialFixedSpace: return "TrivialFixedSpace";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::NoLifts: return "NoLifts";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::UnsupportedGeometry: return "UnsupportedGeometry";
  }
  return "Unknown";
}

}  // namespace orbk
