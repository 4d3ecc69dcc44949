#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcdm {

enum class ErrorCode {
  Input,
  Domain,
  IncompleteJudgment,
  Conflict,
  UnsupportedSize,
  Numeric,
  Degenerate,
  Validation,
  MigrationNeeded,
  Parse,
  Reference,
  MustRecompute,
  TieBoundary,
  Io,
  NotFound,
  StaleRevision,
  ConsistencyGate,
};

std::string_view to_string(ErrorCode code);

// Every engine and workspace failure surfaces as this type; `location` is a JSON
// path, CSV line reference or matrix cell when the failure can be pinned down.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string location = {})
      : std::runtime_error(std::move(message)), code_(code), location_(std::move(location)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

  // "<code>: <message>[ (at <location>)]" on one line.
  std::string describe() const;

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace mcdm
