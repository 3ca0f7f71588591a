#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccrank/feature_schema.hpp"

namespace ccrank {

using CandidateId = std::uint64_t;

inline constexpr int kLogSchemaVersion = 1;

enum class EventKind { Started, CharTyped, NavUp, NavDown, Finished };
enum class SessionOutcome { ExplicitSelect, TypedSelect, ExplicitCancel, TypedCancel };
enum class Trigger { Manual, Auto };

std::string_view to_string(EventKind kind);
std::string_view to_string(SessionOutcome outcome);
std::string_view to_string(Trigger trigger);

inline bool is_select(SessionOutcome o) {
  return o == SessionOutcome::ExplicitSelect || o == SessionOutcome::TypedSelect;
}

struct CandidateRecord {
  CandidateId candidate_id = 0;
  std::uint32_t baseline_rank = 0;
  FeatureVector features;

  friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

struct LookupRecord {
  std::uint32_t ordinal = 0;
  std::uint32_t prefix_length = 0;
  FeatureVector shared_features;
  std::vector<CandidateRecord> candidates;  // baseline-ranked order

  // Position of `id` in candidates, if present.
  std::optional<std::size_t> find(CandidateId id) const;

  friend bool operator==(const LookupRecord&, const LookupRecord&) = default;
};

struct SessionEvent {
  EventKind kind = EventKind::Started;
  std::int64_t offset_ms = 0;
  std::optional<LookupRecord> lookup;
  std::optional<SessionOutcome> outcome;
  std::optional<CandidateId> selected_candidate;

  friend bool operator==(const SessionEvent&, const SessionEvent&) = default;
};

/// Metadata shared by every event of a session.
struct SessionHeader {
  std::string user_id;
  std::string session_id;
  std::string session_date;  // YYYY-MM-DD
  Trigger trigger = Trigger::Auto;
};

struct CompletionSession {
  std::string user_id;
  std::string session_id;
  std::string session_date;
  Trigger trigger = Trigger::Auto;
  std::vector<SessionEvent> events;

  SessionOutcome outcome() const { return *events.back().outcome; }
  std::optional<CandidateId> selected() const { return events.back().selected_candidate; }

  // Look-ups in ordinal order.
  std::vector<const LookupRecord*> lookups() const;
  std::size_t count(EventKind kind) const;

  friend bool operator==(const CompletionSession&, const CompletionSession&) = default;
};

/// One look-up turned into a listwise training query.
struct LabeledGroup {
  std::string session_id;
  std::uint32_t lookup_ordinal = 0;
  std::vector<FeatureVector> rows;
  std::vector<int> targets;
};

/// Checks every structural invariant and returns the assembled session.
/// Throws Error with MissingStarted, MissingFinished, NonMonotoneTime,
/// LookupGap, SelectWithoutCandidate or MalformedSession.
CompletionSession validate_session(std::vector<SessionEvent> events, const SessionHeader& header);

/// Re-validates an already assembled session.
void validate_session(const CompletionSession& session);

/// Groups for every look-up that lists the selected candidate and has at
/// least two candidates. Throws Error(NotASelectOutcome) for cancel sessions.
std::vector<LabeledGroup> to_labeled_groups(const CompletionSession& session);

struct LogHeader {
  int schema_version = kLogSchemaVersion;
  std::string feature_schema_hash;  // 16 lowercase hex digits
};

struct SessionLog {
  LogHeader header;
  std::vector<CompletionSession> sessions;
};

/// One header line, then one JSON object per session per line.
void encode_sessions(std::ostream& out, const LogHeader& header,
                     const std::vector<CompletionSession>& sessions);
std::string encode_sessions(const LogHeader& header, const std::vector<CompletionSession>& sessions);

/// Inverse of encode_sessions. An empty stream decodes to an empty log.
/// Throws SchemaVersionMismatch or MalformedRecord (message carries the line
/// number); decoded sessions are validated.
SessionLog decode_sessions(std::istream& in);
SessionLog decode_sessions(std::string_view bytes);

SessionLog read_log_file(const std::string& path);
void write_log_file(const std::string& path, const SessionLog& log);

/// Strings that may appear verbatim in an encoded log: field names, enum
/// literals and JSON keywords.
const std::set<std::string, std::less<>>& log_whitelist();

/// Vocabulary words found in `encoded` once whitelisted string literals and
/// the header's schema digest are masked out. Empty means no leak.
std::set<std::string> leakage_scan(std::string_view encoded, const std::set<std::string>& vocabulary);

}  // namespace ccrank
