#include "chordidx/error.hpp"

namespace chordidx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kMalformedToken: return "MalformedToken";
    case ErrorCode::kDuplicatePassage: return "DuplicatePassage";
    case ErrorCode::kSignMismatch: return "SignMismatch";
    case ErrorCode::kSideIndexOutOfRange: return "SideIndexOutOfRange";
    case ErrorCode::kMissingGenusHeader: return "MissingGenusHeader";
    case ErrorCode::kWrongLength: return "WrongLength";
    case ErrorCode::kNonInteger: return "NonInteger";
    case ErrorCode::kUnknownCrossing: return "UnknownCrossing";
    case ErrorCode::kUnknownChord: return "UnknownChord";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kNotMod2Admissible: return "NotMod2Admissible";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kGenusMismatch: return "GenusMismatch";
    case ErrorCode::kSiteNotEligible: return "SiteNotEligible";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace chordidx
