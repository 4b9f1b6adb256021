#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sublang/corpus.hpp"
#include "sublang/dictcov.hpp"
#include "sublang/measures.hpp"

namespace sublang {

/// One corpus line before tokenization.
struct RawRecord {
  std::string id;
  std::string discipline;
  std::string title;
  std::string abstract;
};

Document to_document(const RawRecord& record);

/// Corpus file: one JSON object per line with string fields "id",
/// "discipline", "title" and "abstract". Blank lines are ignored; unknown
/// fields are ignored. Throws ParseError naming the line.
std::vector<RawRecord> read_corpus_records(const std::filesystem::path& path);
std::vector<RawRecord> parse_corpus_records(std::istream& in, const std::string& name);
std::vector<Document> read_corpus(const std::filesystem::path& path);

void write_corpus_records(std::ostream& out, std::span<const RawRecord> records);

/// Calls `fn(line_number, line)` for each line that is neither blank nor a
/// comment (first non-space character '#'). Lines are trimmed.
void for_each_data_line(std::istream& in, const std::function<void(std::size_t, std::string_view)>& fn);

/// Stopword file: one token per line, '#' comment lines.
StopwordList read_stopwords(const std::filesystem::path& path);
StopwordList parse_stopwords(std::istream& in, const std::string& name);

/// Headword file: one headword (possibly several words) per line, '#' comment lines.
HeadwordList read_headwords(const std::filesystem::path& path);
HeadwordList parse_headwords(std::istream& in, const std::string& name);

/// Term-set file: one term per line, '#' comment lines.
TermSet read_term_set(const std::filesystem::path& path);

/// Annotation file: rows `discipline,slice,term,category,count` separated by
/// tabs or commas; an optional header row starting with "discipline" is
/// skipped. Counts of repeated (discipline, slice, category) are summed.
AnnotationTable read_annotations(const std::filesystem::path& path);
AnnotationTable parse_annotations(std::istream& in, const std::string& name);

/// Row of a precomputed M_u table: `discipline mu_top mu_bottom [m_delta]`,
/// tab or whitespace separated.
struct MuRow {
  std::string discipline;
  double mu_top = 0.0;
  double mu_bottom = 0.0;
  std::optional<double> published_m_delta;
};

std::vector<MuRow> read_mu_table(const std::filesystem::path& path);
std::vector<MuRow> parse_mu_table(std::istream& in, const std::string& name);

/// Term/frequency file: `term<TAB>frequency` per line.
std::vector<TermFrequency> read_term_frequencies(const std::filesystem::path& path);

/// Model file, tab separated:
///   sublang-model<TAB>1
///   mode<TAB>title|abstract|both
///   discipline<TAB>label<TAB>documents<TAB>tokens      (one per discipline, in order)
///   stopword<TAB>token                                 (zero or more)
///   term<TAB>token<TAB>global<TAB>count_1 ... count_N  (sorted by token)
void write_model(std::ostream& out, const FrequencyModel& model);
FrequencyModel read_model(const std::filesystem::path& path);
FrequencyModel parse_model(std::istream& in, const std::string& name);

/// Splits on tabs and/or commas (or any whitespace when `whitespace` is set).
std::vector<std::string_view> split_fields(std::string_view line, bool whitespace = false);

}  // namespace sublang
