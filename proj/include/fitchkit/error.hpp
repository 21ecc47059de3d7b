#pragma once

#include <stdexcept>
#include <string>

namespace fitchkit {

enum class ErrorKind {
  kInvalidName,
  kDuplicateName,
  kUnknownLeaf,
  kUnknownColor,
  kUnknownName,
  kSelfPair,
  kDuplicateEntry,
  kInvalidTree,
  kDegreeViolation,
  kParseError,
  kEmptyMember,
  kDuplicateMember,
  kNotSubsetOfUniverse,
  kNotAHierarchy,
  kTooFewLeaves,
  kUniverseMismatch,
  kTreeDoesNotExplainMap,
  kInstanceTooLarge,
  kPartNotSubsetOfM,
  kInvalidArgument,
};

const char* to_string(ErrorKind kind);

// All library errors are reported through this type; `kind()` is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fitchkit
