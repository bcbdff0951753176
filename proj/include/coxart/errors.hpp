#pragma once

#include <stdexcept>
#include <string>

namespace coxart {

// All library failures are reported through this exception. code_name() is the
// machine-readable identifier the CLI prints on stderr.
class Error : public std::runtime_error {
 public:
  enum class Code {
    kSyntax,
    kDuplicateVertex,
    kUnknownVertex,
    kBadLabel,
    kTooManyVertices,
    kBadWord,
    kNotAnEdge,
    kOrbitCapExceeded,
    kPreconditionViolated,
    kAssertionFailure,
    kModelUnavailable,
    kGroupTooLargeOrInfinite,
  };

  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const noexcept { return code_; }

  const char* code_name() const noexcept {
    switch (code_) {
      case Code::kSyntax: return "syntax-error";
      case Code::kDuplicateVertex: return "duplicate-vertex";
      case Code::kUnknownVertex: return "unknown-vertex";
      case Code::kBadLabel: return "bad-label";
      case Code::kTooManyVertices: return "too-many-vertices";
      case Code::kBadWord: return "bad-word";
      case Code::kNotAnEdge: return "not-an-edge";
      case Code::kOrbitCapExceeded: return "orbit-cap-exceeded";
      case Code::kPreconditionViolated: return "precondition-violated";
      case Code::kAssertionFailure: return "assertion-failure";
      case Code::kModelUnavailable: return "model-unavailable";
      case Code::kGroupTooLargeOrInfinite: return "group-too-large-or-infinite";
    }
    return "unknown";
  }

 private:
  Code code_;
};

}  // namespace coxart
