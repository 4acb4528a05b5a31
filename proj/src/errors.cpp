#include "fibrant/errors.hpp"

namespace fibrant {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStructural: return "STRUCTURAL";
    case ErrorCode::kResourceLimit: return "RESOURCE_LIMIT";
    case ErrorCode::kNotPrimary: return "NOT_PRIMARY";
    case ErrorCode::kNoStabilization: return "NO_STABILIZATION";
    case ErrorCode::kContainment: return "CONTAINMENT";
    case ErrorCode::kNotAReductionWithinBound: return "NOT_A_REDUCTION_WITHIN_BOUND";
    case ErrorCode::kSearchExhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::kHypothesis: return "HYPOTHESIS";
    case ErrorCode::kRegularityNotEstablished: return "REGULARITY_NOT_ESTABLISHED";
    case ErrorCode::kInsufficientDepth: return "INSUFFICIENT_TABLE_DEPTH";
    case ErrorCode::kMissingRationalForm: return "MISSING_RATIONAL_FORM";
    case ErrorCode::kInternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::kParse: return "PARSE";
  }
  return "UNKNOWN";
}

}  // namespace fibrant
