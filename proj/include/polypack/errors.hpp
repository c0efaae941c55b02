#pragma once

#include <stdexcept>
#include <string>

namespace polypack {

enum class ErrorKind {
  Domain,
  SizeLimitExceeded,
  UnsupportedKind,
  LayoutConflict,
  UnroutedConnection,
  InvalidRotation,
  ParityMismatch,
  ParamViolation,
  NonSimpleResult,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polypack
