#include "mcdm/error.hpp"

namespace mcdm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Input: return "input";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::IncompleteJudgment: return "incomplete_judgment";
    case ErrorCode::Conflict: return "conflict";
    case ErrorCode::UnsupportedSize: return "unsupported_size";
    case ErrorCode::Numeric: return "numeric";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::MigrationNeeded: return "migration_needed";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Reference: return "reference";
    case ErrorCode::MustRecompute: return "must_recompute";
    case ErrorCode::TieBoundary: return "tie_boundary";
    case ErrorCode::Io: return "io";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::StaleRevision: return "stale_revision";
    case ErrorCode::ConsistencyGate: return "consistency_gate";
  }
  return "unknown";
}

std::string Error::describe() const {
  std::string out{to_string(code_)};
  out += ": ";
  out += what();
  if (!location_.empty()) {
    out += " (at ";
    out += location_;
    out += ")";
  }
  for (char& c : out) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

}  // namespace mcdm
