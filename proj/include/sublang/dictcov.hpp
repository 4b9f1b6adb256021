#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sublang/corpus.hpp"

namespace sublang {

/// How a term relates to a specialized dictionary's headwords.
enum class CoverageCode : int { NotInDict = 0, ExactMatch = 1, PhraseStart = 2, Variant = 3 };

inline constexpr std::size_t kCoverageCodeCount = 4;

std::string_view to_string(CoverageCode code);

/// Lowercases ASCII and collapses runs of whitespace to single spaces.
std::string normalize_headword(std::string_view raw);

/// Set of dictionary headwords; a headword is one or more tokens separated by
/// single spaces.
class HeadwordList {
 public:
  HeadwordList() = default;
  /// Entries are normalized; throws ConfigError on one that is empty afterwards.
  explicit HeadwordList(const std::vector<std::string>& entries);

  bool has_single(std::string_view token) const { return singles_.find(token) != singles_.end(); }
  /// True if some multi-token headword begins with `token`.
  bool starts_phrase(std::string_view token) const {
    return phrase_heads_.find(token) != phrase_heads_.end();
  }
  const std::set<std::string, std::less<>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::set<std::string, std::less<>> entries_;
  std::set<std::string, std::less<>> singles_;
  std::set<std::string, std::less<>> phrase_heads_;
};

/// Inflectional-variant relation between two tokens.
///
/// Holds when one token is the other plus "s" or "es"; when a final "y" is
/// replaced by "ies"; or when one token ends in "ed"/"ing" and its stem (at
/// least two characters) equals the other, equals the other with a doubled
/// final consonant, or equals the other minus a final "e". Symmetric; true for
/// identical tokens. A rule approximation, not a morphological analyzer.
bool variant_match(std::string_view a, std::string_view b);

/// Every token b != a with variant_match(a, b).
std::vector<std::string> variant_candidates(std::string_view a);

/// Codes with fixed priority ExactMatch > PhraseStart > Variant > NotInDict.
CoverageCode code_term(std::string_view term, const HeadwordList& headwords);

struct CodedTerm {
  std::string term;
  std::int64_t frequency = 0;
  CoverageCode code = CoverageCode::NotInDict;
};

std::vector<CodedTerm> code_sample(std::span<const TermFrequency> sample, const HeadwordList& headwords);

/// Term counts, percentages and mean frequencies per coverage code.
struct CoverageReport {
  std::size_t total = 0;
  std::array<std::size_t, kCoverageCodeCount> counts{};
  std::array<double, kCoverageCodeCount> percent{};
  /// Mean term frequency; empty for a code with no terms.
  std::array<std::optional<double>, kCoverageCodeCount> mean_frequency{};
  /// Whole-percent change of each mean versus the NotInDict mean; empty when
  /// either mean is undefined.
  std::array<std::optional<long>, kCoverageCodeCount> percent_change{};
};

/// 100 * (mean - baseline) / baseline rounded half away from zero; empty when
/// baseline <= 0.
std::optional<long> percent_change(double baseline, double mean);

/// percent_change() of every entry against entry 0.
std::array<std::optional<long>, kCoverageCodeCount> percent_change_row(
    const std::array<std::optional<double>, kCoverageCodeCount>& means);

/// Throws ConfigError on an empty sample.
CoverageReport coverage_report(std::span<const CodedTerm> coded);
CoverageReport coverage_report(std::span<const TermFrequency> sample, const HeadwordList& headwords);

/// Unweighted mean of each code's mean frequency over several reports.
std::array<std::optional<double>, kCoverageCodeCount> average_means(
    std::span<const CoverageReport> reports);

}  // namespace sublang
