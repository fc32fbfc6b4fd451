#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace arcmatch {

enum class ErrorCode {
  DuplicateVertex,
  SelfLoop,
  GapInVertexSet,
  VertexOutOfRange,
  SharedVertex,
  UnknownEdge,
  EmptySegment,
  DuplicatePin,
  NotIndecomposable,
  NotRightReaching,
  SizeTooSmall,
  DuplicateValue,
  InsufficientCrossers,
  SizeCapExceeded,
  ParseError,
  EmptyMatching,
  InvalidCertificate,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Every library failure is reported through this exception. `detail()` carries
// the offending vertex (or the 1-based character position for ParseError)
// when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::optional<long> detail = std::nullopt)
      : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<long> detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<long> detail_;
};

}  // namespace arcmatch
