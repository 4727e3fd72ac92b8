#pragma once

#include <stdexcept>
#include <string>

namespace latbn {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kUndefinedConditional,
  kDegenerateLikelihood,
  kSizeCap,
  kVerdictConflict,
};

// Exception type for all latbn failures. `kind()` lets callers (notably the
// CLI) map failures onto exit codes without matching message strings.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latbn
