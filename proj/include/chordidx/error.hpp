#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chordidx {

enum class ErrorCode : int {
  kMalformedToken = 1,
  kDuplicatePassage,
  kSignMismatch,
  kSideIndexOutOfRange,
  kMissingGenusHeader,
  kWrongLength,
  kNonInteger,
  kUnknownCrossing,
  kUnknownChord,
  kNotAdmissible,
  kNotMod2Admissible,
  kLengthMismatch,
  kGenusMismatch,
  kSiteNotEligible,
  kInvalidArgument,
  kOverflow,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by index computations on a class that pairs nontrivially with [D].
/// Carries the offending intersection number.
class NotAdmissibleError : public Error {
 public:
  NotAdmissibleError(ErrorCode code, std::int64_t pairing, const std::string& message)
      : Error(code, message), pairing_(pairing) {}

  std::int64_t pairing() const noexcept { return pairing_; }

 private:
  std::int64_t pairing_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace chordidx
