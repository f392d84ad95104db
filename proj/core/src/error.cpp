#include "forestbetti/error.hpp"

namespace forestbetti {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidFacet:
      return "InvalidFacet";
    case ErrorCode::kInvalidIndex:
      return "InvalidIndex";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kNotSquarefree:
      return "NotSquarefree";
    case ErrorCode::kEmptyIdeal:
      return "EmptyIdeal";
    case ErrorCode::kUnitIdeal:
      return "UnitIdeal";
    case ErrorCode::kNotATree:
      return "NotATree";
    case ErrorCode::kNotAForest:
      return "NotAForest";
    case ErrorCode::kInvalidField:
      return "InvalidField";
    case ErrorCode::kParse:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace forestbetti
