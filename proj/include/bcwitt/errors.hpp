#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcw {

enum class ErrorKind {
  NotQuasiUnipotent,
  NotSplit,
  NotDivisible,
  DegenerateIterate,
  NotEffectivelyTorified,
  HalfTwistPresent,
  TruncationTooSmall,
};

std::string_view error_kind_name(ErrorKind kind);

/// A mathematically meaningful failure (as opposed to a bad argument, which
/// is reported with std::invalid_argument).
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// DegenerateIterate carries the offending iterate index.
class DegenerateIterateError : public DomainError {
 public:
  explicit DegenerateIterateError(long long iterate)
      : DomainError(ErrorKind::DegenerateIterate,
                    "det(I - M^" + std::to_string(iterate) + ") = 0"),
        iterate_(iterate) {}

  long long iterate() const noexcept { return iterate_; }

 private:
  long long iterate_;
};

}  // namespace bcw
