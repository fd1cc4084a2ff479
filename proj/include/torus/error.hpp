#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torus {

enum class ErrorKind {
  Parse,
  BothZero,
  SingularBasis,
  NotABasis,
  AxisAlignedGenerator,
  InvalidTiling,
  CycleExists,
  ReductionStepInvalid,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to a stable diagnostic.
class TilerError : public std::runtime_error {
public:
  TilerError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace torus
