#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ccrank {

using KeywordSet = std::set<std::string, std::less<>>;

enum class TokenKind { Identifier, Keyword };
enum class BlockKind { TopLevel, FunctionBody, ConditionalBody, LoopBody };

inline constexpr std::size_t kBlockKinds = 4;
std::string_view to_string(BlockKind kind);

struct Token {
  std::string text;
  TokenKind kind = TokenKind::Identifier;
  std::uint32_t file = 0;
  std::size_t byte_offset = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Maximal-munch identifiers ([A-Za-z_][A-Za-z0-9_]*) and keywords. Runs that
/// start with a digit are number literals and produce no token.
std::vector<Token> tokenize(std::string_view text, const KeywordSet& keywords, std::uint32_t file = 0);

/// Keywords that open an indented block, mapped to the block they open.
struct BlockRules {
  std::map<std::string, BlockKind, std::less<>> openers = {
      {"def", BlockKind::FunctionBody},     {"for", BlockKind::LoopBody},
      {"while", BlockKind::LoopBody},       {"if", BlockKind::ConditionalBody},
      {"elif", BlockKind::ConditionalBody}, {"else", BlockKind::ConditionalBody},
      {"try", BlockKind::ConditionalBody},  {"except", BlockKind::ConditionalBody},
      {"finally", BlockKind::ConditionalBody}, {"with", BlockKind::ConditionalBody},
      {"class", BlockKind::TopLevel},
  };
};

/// Innermost enclosing block of every token, from indentation.
std::vector<BlockKind> enclosing_blocks(std::string_view text, const std::vector<Token>& tokens,
                                        const BlockRules& rules);

KeywordSet load_keywords(const std::string& path);
KeywordSet default_keywords();

struct SourceFile {
  std::string id;  // relative path
  std::string text;
};

/// Lexical scope index over a corpus. Immutable once built.
class ScopeIndex {
 public:
  using TokenId = std::uint32_t;

  struct Occurrences {
    std::uint32_t count = 0;
    std::size_t last_offset = 0;
    std::vector<std::uint32_t> positions;  // token ordinals within the file
  };

  struct File {
    std::string id;
    std::uint32_t dir = 0;
    std::vector<Token> tokens;
    std::vector<TokenId> token_ids;
    std::vector<BlockKind> blocks;
    std::unordered_map<TokenId, Occurrences> table;
  };

  std::size_t file_count() const { return files_.size(); }
  const File& file(std::size_t i) const { return files_[i]; }
  std::optional<std::size_t> find_file(std::string_view id) const;

  std::size_t vocabulary_size() const { return texts_.size(); }
  const std::string& text(TokenId id) const { return texts_[id]; }
  bool is_keyword(TokenId id) const { return keyword_[id]; }
  std::uint32_t global_count(TokenId id) const { return global_count_[id]; }
  std::optional<TokenId> find(std::string_view text) const;

  const Occurrences* in_file(std::size_t file, TokenId id) const;
  std::uint32_t dir_count(std::uint32_t dir, TokenId id) const;

  const KeywordSet& keywords() const { return keywords_; }

  // Token ids whose text starts with `prefix`, sorted by text.
  std::vector<TokenId> with_prefix(std::string_view prefix) const;
  std::vector<TokenId> with_prefix_ignore_case(std::string_view prefix) const;

  // Identifier texts (length >= min_length) occurring in the corpus.
  std::set<std::string> identifier_vocabulary(std::size_t min_length) const;

 private:
  friend ScopeIndex build_index(std::vector<SourceFile> files, KeywordSet keywords,
                                const BlockRules& rules);

  TokenId intern(std::string_view text, bool keyword);

  std::vector<File> files_;
  std::unordered_map<std::string, std::size_t> file_lookup_;
  std::vector<std::string> texts_;
  std::vector<bool> keyword_;
  std::vector<std::uint32_t> global_count_;
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<std::unordered_map<TokenId, std::uint32_t>> dir_counts_;
  std::vector<TokenId> sorted_;     // by text
  std::vector<TokenId> sorted_ci_;  // by lowercased text
  std::vector<std::string> lower_;
  KeywordSet keywords_;
};

/// Throws Error(DuplicateFileId). Deterministic for a fixed input order.
ScopeIndex build_index(std::vector<SourceFile> files, KeywordSet keywords,
                       const BlockRules& rules = BlockRules{});

/// Reads files under `root` whose extension is listed, in sorted path order.
std::vector<SourceFile> read_corpus(const std::string& root, const std::vector<std::string>& extensions);

/// Caret position inside an indexed file. The prefix lives only in memory.
struct CaretContext {
  std::size_t file = 0;
  std::size_t byte_offset = 0;
  std::string prefix;
  BlockKind enclosing_block = BlockKind::TopLevel;
};

/// Per-candidate statistics at a caret, with the token under the caret
/// excluded from every count.
struct CandidateStats {
  ScopeIndex::TokenId id = 0;
  bool keyword = false;
  bool case_sensitive_match = false;
  std::uint32_t same_file_count = 0;
  std::uint32_t dir_count = 0;
  std::uint32_t global_count = 0;
  std::optional<std::uint32_t> tokens_since_last_use;  // previous same-file use
};

/// Resolves the caret against the index once per look-up.
class CaretView {
 public:
  CaretView(const ScopeIndex& index, const CaretContext& ctx);

  const ScopeIndex& index() const { return *index_; }
  const CaretContext& context() const { return *ctx_; }
  // Ordinal of the token being typed (or the first token after the caret).
  std::size_t ordinal() const { return ordinal_; }
  std::optional<ScopeIndex::TokenId> typed_token() const { return typed_; }

  CandidateStats stats(ScopeIndex::TokenId id) const;

 private:
  const ScopeIndex* index_;
  const CaretContext* ctx_;
  std::size_t ordinal_ = 0;
  std::optional<ScopeIndex::TokenId> typed_;
};

/// Distinct tokens and keywords extending the prefix. Falls back to a
/// case-insensitive match when the case-sensitive set is empty. Throws
/// Error(UnknownFile).
std::vector<ScopeIndex::TokenId> candidates_at(const ScopeIndex& index, const CaretContext& ctx);

double heuristic_score(const CaretView& caret, ScopeIndex::TokenId id);

/// Baseline ordering: descending heuristic score, then shorter text, then
/// lexicographic text.
std::vector<ScopeIndex::TokenId> heuristic_rank(std::vector<ScopeIndex::TokenId> candidates,
                                                const CaretContext& ctx, const ScopeIndex& index);
std::vector<ScopeIndex::TokenId> heuristic_rank(std::vector<ScopeIndex::TokenId> candidates,
                                                const CaretView& caret);

}  // namespace ccrank
