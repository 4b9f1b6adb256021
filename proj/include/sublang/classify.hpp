#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sublang/corpus.hpp"

namespace sublang {

/// Sink label for documents left unclassified.
inline constexpr std::string_view kUnclassifiedLabel = "⟂";

/// What to predict for a document none of whose terms has a usable percentile.
struct FallbackPolicy {
  enum class Kind { Unclassified, Random };

  Kind kind = Kind::Unclassified;
  std::uint64_t seed = 0;

  static FallbackPolicy unclassified() { return {}; }
  static FallbackPolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }

  friend bool operator==(const FallbackPolicy&, const FallbackPolicy&) = default;
};

/// "unclassified" or "random:<seed>".
FallbackPolicy parse_fallback(std::string_view text);
std::string to_string(const FallbackPolicy& policy);

/// Whether a term contributes once, or once per occurrence in the document.
enum class TermWeighting { Distinct, TokenMultiplicity };

struct ClassifyOptions {
  FieldMode mode = FieldMode::Both;
  FallbackPolicy fallback = FallbackPolicy::unclassified();
  TermWeighting weighting = TermWeighting::Distinct;
};

struct DocumentScore {
  std::string doc_id;
  std::string actual;
  std::vector<double> weights;  // indexed like FrequencyModel::disciplines()
  std::string predicted;
  std::size_t usable_terms = 0;
  bool fallback_used = false;
};

/// Label chosen for a document without usable terms. Random draws uniformly
/// from `disciplines` with a generator keyed on (seed, doc_id), so the result
/// does not depend on scoring order.
std::string fallback_assign(std::string_view doc_id, const FallbackPolicy& policy,
                            std::span<const std::string> disciplines);

/// Leave-one-out score of a document that is part of `model`.
///
/// For each term w of the document with in-document count c, the home
/// discipline's count and the global count are reduced by c before taking the
/// percentile in every discipline at rate (global - c) / N. Terms whose
/// reduced global count is zero are skipped.
///
/// Throws ConfigError when options.mode differs from the model's mode,
/// IngestError for an unregistered label, ConsistencyError when the document
/// holds more occurrences of a term than its discipline does.
DocumentScore score_document(const Document& doc, const FrequencyModel& model,
                             const ClassifyOptions& options);

/// Counts indexed (actual, predicted), plus an unclassified column per row.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::vector<std::string> labels);

  void add(std::size_t actual, std::optional<std::size_t> predicted);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::int64_t at(std::size_t actual, std::size_t predicted) const;
  std::int64_t unclassified(std::size_t actual) const { return unclassified_.at(actual); }
  std::int64_t row_total(std::size_t actual) const;
  std::int64_t total() const;
  std::int64_t trace() const;
  /// Correct fraction for one discipline; 0 for an empty row.
  double accuracy(std::size_t actual) const;
  double overall_accuracy() const;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::int64_t> counts_;  // row-major N x N
  std::vector<std::int64_t> unclassified_;
};

struct ClassificationResult {
  std::vector<DocumentScore> scores;
  ConfusionMatrix matrix;
};

/// Scores every document (in parallel) and aggregates the confusion matrix.
/// The first failing document's error, in input order, is rethrown.
ClassificationResult classify_all(const FrequencyModel& model, std::span<const Document> documents,
                                  const ClassifyOptions& options);

namespace serial {

/// Single-threaded reference for classify_all().
ClassificationResult classify_all(const FrequencyModel& model, std::span<const Document> documents,
                                  const ClassifyOptions& options);

}  // namespace serial

}  // namespace sublang
