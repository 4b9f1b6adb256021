#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sublang {

/// Which fields of a document feed the frequency tables.
enum class FieldMode { TitleOnly, AbstractOnly, Both };

/// "title", "abstract" or "both".
std::string_view to_string(FieldMode mode);
FieldMode parse_field_mode(std::string_view text);

/// One title+abstract record with its discipline label.
struct Document {
  std::string id;
  std::string discipline;
  std::vector<std::string> title_terms;
  std::vector<std::string> abstract_terms;

  /// Tokens of the selected fields, title first.
  std::vector<std::string> terms(FieldMode mode) const;
};

/// Tokenizes `title` and `abstract` into a Document.
Document make_document(std::string id, std::string discipline, std::string_view title,
                       std::string_view abstract);

class StopwordList {
 public:
  StopwordList() = default;
  /// Throws ConfigError on an entry that is not a normalized token. Duplicates collapse.
  explicit StopwordList(const std::vector<std::string>& terms);

  bool contains(std::string_view term) const { return terms_.find(term) != terms_.end(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::set<std::string, std::less<>>& terms() const noexcept { return terms_; }

 private:
  std::set<std::string, std::less<>> terms_;
};

struct TermCounts {
  std::int64_t global = 0;
  std::vector<std::int64_t> per_db;  // indexed by discipline
};

struct TermFrequency {
  std::string term;
  std::int64_t frequency = 0;

  friend bool operator==(const TermFrequency&, const TermFrequency&) = default;
};

/// Per-discipline and global term-count tables.
///
/// Immutable once built; all accessors are const and safe to call
/// concurrently. Invariants (checked on construction): per-discipline counts
/// sum to the global count for every term, every global count is >= 1, and no
/// stopword is a key.
class FrequencyModel {
 public:
  using TermTable = std::unordered_map<std::string, TermCounts>;

  /// Assembles a model from precomputed tables. Throws ConfigError if any
  /// invariant fails.
  static FrequencyModel from_tables(std::vector<std::string> disciplines, FieldMode mode,
                                    StopwordList stopwords, TermTable terms,
                                    std::vector<std::size_t> document_counts,
                                    std::vector<std::int64_t> token_counts);

  const std::vector<std::string>& disciplines() const noexcept { return disciplines_; }
  std::size_t discipline_count() const noexcept { return disciplines_.size(); }
  std::optional<std::size_t> discipline_index(std::string_view label) const;
  /// Like discipline_index but throws ConfigError for an unregistered label.
  std::size_t require_discipline(std::string_view label) const;

  FieldMode mode() const noexcept { return mode_; }
  const StopwordList& stopwords() const noexcept { return stopwords_; }

  /// nullptr when the term never occurs in the model.
  const TermCounts* find(const std::string& term) const;
  std::int64_t count(std::size_t discipline, const std::string& term) const;
  std::int64_t global_count(const std::string& term) const;
  const TermTable& terms() const noexcept { return terms_; }

  /// Terms with count >= 1 in `discipline`, with that count, ordered by term.
  std::vector<TermFrequency> discipline_vocabulary(std::size_t discipline) const;
  std::size_t document_count(std::size_t discipline) const { return document_counts_.at(discipline); }
  /// Non-stopword tokens counted for `discipline` in the model's mode.
  std::int64_t token_count(std::size_t discipline) const { return token_counts_.at(discipline); }

  /// Throws ConfigError describing the first violated invariant.
  void check_invariants() const;

 private:
  FrequencyModel() = default;

  std::vector<std::string> disciplines_;
  FieldMode mode_ = FieldMode::Both;
  StopwordList stopwords_;
  TermTable terms_;
  std::vector<std::size_t> document_counts_;
  std::vector<std::int64_t> token_counts_;
};

/// Builds the tables with disciplines registered in order of first appearance.
///
/// Throws IngestError for an empty corpus, a missing label, a duplicate or
/// empty id, or a malformed token; ConfigError when fewer than two
/// disciplines are present.
FrequencyModel build_model(std::span<const Document> documents, const StopwordList& stopwords,
                           FieldMode mode);

/// Same, with an explicit registered label list. Documents carrying a label
/// outside the list are rejected; disciplines without documents are kept.
FrequencyModel build_model(std::span<const Document> documents, const StopwordList& stopwords,
                           FieldMode mode, std::vector<std::string> disciplines);

/// Terms of `discipline` by descending frequency, ties by ascending term.
std::vector<TermFrequency> sorted_by_frequency(const FrequencyModel& model,
                                               std::string_view discipline);

/// Every floor(V/k)-th entry of sorted_by_frequency(), starting at index 0,
/// truncated to exactly k. Throws ConfigError if k == 0 or k > V.
std::vector<TermFrequency> systematic_sample(const FrequencyModel& model,
                                             std::string_view discipline, std::size_t k);

}  // namespace sublang
