#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kaleido {

enum class ErrorCode {
  // graph-core
  SelfLoop,
  DuplicateEdge,
  ColorOutOfRange,
  VertexOutOfRange,
  DegreeTooSmall,
  InvalidArgument,
  // complete-kaleidoscope
  OddOrder,
  OrderTooSmall,
  TargetOutOfRange,
  HalfTooSmall,
  RangeViolation,
  NotASpecialCase,
  SearchFailed,
  // regular3-kaleidoscope
  IndexOutOfRange,
  BadDegree,
  PatchMismatch,
  // search-oracle
  NotRegular,
  InfeasibleDegree,
  NoCandidates,
  // documents
  MalformedDocument,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kaleido
