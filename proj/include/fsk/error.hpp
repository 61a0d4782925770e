#pragma once

#include <stdexcept>
#include <string>

namespace fsk {

enum class ErrorKind {
  DivisionByZero,
  RingMismatch,
  LengthMismatch,
  InvalidArgument,
  DecompositionFailure,
  IterationCap,
  NoTestElement,
  SocleNotOneDimensional,
  NoUSolution,
  AvoidanceFailure,
  BoundExceeded,
  CertificateFailure,
  DomainSelectionFailure,
  Unsupported,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it to
/// an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fsk
