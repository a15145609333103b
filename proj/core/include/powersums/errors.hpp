#ifndef POWERSUMS_ERRORS_HPP
#define POWERSUMS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace powersums {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  NotASquare,
  FactorizationTooLarge,
  DegenerateParameter,
  PointNotOnCurve,
  ZeroScale,
  ConstantNotSquare,
  SingularCubic,
  UnmappablePoint,
  NoPointsFound,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and is what
/// callers (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace powersums

#endif  // POWERSUMS_ERRORS_HPP
