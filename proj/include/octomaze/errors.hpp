#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace octomaze {

enum class ErrorCode {
  ZeroDirection,
  ParallelIncidence,
  InvalidSlope,
  DegenerateSegment,
  OverlappingSegments,
  StartOnSegment,
  StartOutsideBBox,
  SegmentOutsideBBox,
  IndexOutOfRange,
  NotOnLattice,
  ConstructionInconsistency,
  InvalidIET,
  OutOfRange,
  AlreadyTotal,
  PreconditionViolated,
  OutOfConveyor,
  StepBudgetExceeded,
  SyntaxError,
  GenerationFailure,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `item` names the offending input
/// element (a segment index) when one is identifiable; `line` is filled in
/// by the text front end.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<std::size_t> item = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message), item_(item) {}

  ErrorCode code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> item() const noexcept { return item_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  Error with_line(std::size_t line) const {
    Error copy = *this;
    copy.line_ = line;
    return copy;
  }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> item_;
  std::optional<std::size_t> line_;
};

}  // namespace octomaze
