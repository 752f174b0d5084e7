#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treealg {

/// Base of every domain error raised by the library.
///
/// `name()` is the stable error identifier surfaced by the CLI and in JSON
/// reports; `witness()` carries the offending objects rendered in the ASCII
/// tree/word grammar so a caller can reproduce the failure.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message, std::vector<std::string> witness = {})
      : std::runtime_error(message), name_(std::move(name)), witness_(std::move(witness)) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string name_;
  std::vector<std::string> witness_;
};

#define TREEALG_DEFINE_ERROR(Type)                                                          \
  class Type : public Error {                                                               \
   public:                                                                                  \
    explicit Type(const std::string& message, std::vector<std::string> witness = {})        \
        : Error(#Type, message, std::move(witness)) {}                                      \
  }

TREEALG_DEFINE_ERROR(InvalidAlphabet);
TREEALG_DEFINE_ERROR(AlphabetTooSmall);
TREEALG_DEFINE_ERROR(MalformedTree);
TREEALG_DEFINE_ERROR(MalformedSkeleton);
TREEALG_DEFINE_ERROR(LengthMismatch);
TREEALG_DEFINE_ERROR(UniverseTooLarge);
TREEALG_DEFINE_ERROR(PairOutOfUniverse);
TREEALG_DEFINE_ERROR(HypothesesViolated);
TREEALG_DEFINE_ERROR(EvaluationFailure);
TREEALG_DEFINE_ERROR(EmptyImage);
TREEALG_DEFINE_ERROR(NotCP);
TREEALG_DEFINE_ERROR(MalformedInput);

#undef TREEALG_DEFINE_ERROR

}  // namespace treealg
