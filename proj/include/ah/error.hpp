#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ah {

enum class ErrorKind {
  MalformedInput,
  CartanNotFiniteType,
  TorsionQuotient,
  NoVarsigma,
  DimensionMismatch,
  NotDominant,
  NotFinitary,
  NotSpherical,
  NotRestricted,
  FlavorMismatch,
  Unrepresentable,
  UnknownPreset,
  BoundsTooLarge,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Internal invariant check that survives NDEBUG builds.
inline void ensure(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::Internal, what);
}

}  // namespace ah
