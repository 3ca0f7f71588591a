#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccrank {

enum class ErrorCode {
  // log_schema
  MissingStarted,
  MissingFinished,
  NonMonotoneTime,
  LookupGap,
  SelectWithoutCandidate,
  MalformedSession,
  NotASelectOutcome,
  SchemaVersionMismatch,
  MalformedRecord,
  // candidate_provider
  DuplicateFileId,
  UnknownFile,
  // feature_extraction
  SchemaMismatch,
  ArityMismatch,
  EmptySchema,
  // ranker
  InvalidParams,
  EmptyDataset,
  DegenerateGroups,
  InvalidGroup,
  SizeMismatch,
  // model_artifact
  BudgetExceeded,
  BadMagic,
  VersionUnsupported,
  Truncated,
  MalformedArtifact,
  SchemaHashMismatch,
  // evaluation
  EmptyScope,
  TooFewUsers,
  NoQualifyingSessions,
  // user_sim
  EmptyCorpus,
  // plumbing
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a stable error code. Every module reports contract
/// violations through this type so callers (and the CLI) can dispatch on
/// code() instead of parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ccrank
