#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forestbetti {

enum class ErrorCode {
  kInvalidFacet,
  kInvalidIndex,
  kTooLarge,
  kNotSquarefree,
  kEmptyIdeal,
  kUnitIdeal,
  kNotATree,
  kNotAForest,
  kInvalidField,
  kParse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace forestbetti
