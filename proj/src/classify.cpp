#include "sublang/classify.hpp"

#include <charconv>
#include <exception>
#include <map>
#include <random>

#include "sublang/error.hpp"
#include "sublang/poisson.hpp"

namespace sublang {

FallbackPolicy parse_fallback(std::string_view text) {
  if (text == "unclassified") return FallbackPolicy::unclassified();
  constexpr std::string_view prefix = "random:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
      return FallbackPolicy::random(seed);
  }
  throw ConfigError("bad fallback policy '" + std::string(text) + "' (expected random:<seed>|unclassified)");
}

std::string to_string(const FallbackPolicy& policy) {
  if (policy.kind == FallbackPolicy::Kind::Unclassified) return "unclassified";
  return "random:" + std::to_string(policy.seed);
}

namespace {

// FNV-1a; std::hash is not stable across implementations.
std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string fallback_assign(std::string_view doc_id, const FallbackPolicy& policy,
                            std::span<const std::string> disciplines) {
  if (policy.kind == FallbackPolicy::Kind::Unclassified || disciplines.empty())
    return std::string(kUnclassifiedLabel);
  std::seed_seq seq{static_cast<std::uint32_t>(policy.seed), static_cast<std::uint32_t>(policy.seed >> 32),
                    static_cast<std::uint32_t>(stable_hash(doc_id)),
                    static_cast<std::uint32_t>(stable_hash(doc_id) >> 32)};
  std::mt19937_64 rng(seq);
  return disciplines[rng() % disciplines.size()];
}

DocumentScore score_document(const Document& doc, const FrequencyModel& model,
                             const ClassifyOptions& options) {
  if (options.mode != model.mode())
    throw ConfigError("document scored in mode '" + std::string(to_string(options.mode)) +
                      "' against a model built in mode '" + std::string(to_string(model.mode())) + "'");
  const auto home = model.discipline_index(doc.discipline);
  if (!home) throw IngestError(doc.id, "unknown discipline '" + doc.discipline + "'");

  std::map<std::string, std::int64_t> doc_counts;
  for (const auto* field : {&doc.title_terms, &doc.abstract_terms}) {
    const bool selected = field == &doc.title_terms ? options.mode != FieldMode::AbstractOnly
                                                    : options.mode != FieldMode::TitleOnly;
    if (!selected) continue;
    for (const auto& t : *field) {
      if (!model.stopwords().contains(t)) ++doc_counts[t];
    }
  }

  const std::size_t n = model.discipline_count();
  DocumentScore score{doc.id, doc.discipline, std::vector<double>(n, 0.0), {}, 0, false};

  for (const auto& [term, c] : doc_counts) {
    const TermCounts* counts = model.find(term);
    const std::int64_t home_count = counts ? counts->per_db[*home] : 0;
    if (c > home_count)
      throw ConsistencyError(doc.id, "term '" + term + "' occurs " + std::to_string(c) +
                                         " times in the document but " + std::to_string(home_count) +
                                         " times in its discipline");
    const std::int64_t reduced_global = counts->global - c;
    if (reduced_global == 0) continue;
    const double lambda = static_cast<double>(reduced_global) / static_cast<double>(n);
    const double multiplier =
        options.weighting == TermWeighting::TokenMultiplicity ? static_cast<double>(c) : 1.0;
    for (std::size_t d = 0; d < n; ++d) {
      const std::int64_t t = counts->per_db[d] - (d == *home ? c : 0);
      score.weights[d] += multiplier * poisson::percentile(t, lambda);
    }
    ++score.usable_terms;
  }

  if (score.usable_terms == 0) {
    score.fallback_used = true;
    score.predicted = fallback_assign(doc.id, options.fallback, model.disciplines());
    return score;
  }
  std::size_t best = 0;
  for (std::size_t d = 1; d < n; ++d) {
    if (score.weights[d] > score.weights[best]) best = d;
  }
  score.predicted = model.disciplines()[best];
  return score;
}

// ---------------------------------------------------------------------------

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      counts_(labels_.size() * labels_.size(), 0),
      unclassified_(labels_.size(), 0) {}

void ConfusionMatrix::add(std::size_t actual, std::optional<std::size_t> predicted) {
  if (actual >= size() || (predicted && *predicted >= size()))
    throw ConfigError("confusion matrix index out of range");
  if (predicted)
    ++counts_[actual * size() + *predicted];
  else
    ++unclassified_[actual];
}

std::int64_t ConfusionMatrix::at(std::size_t actual, std::size_t predicted) const {
  if (actual >= size() || predicted >= size()) throw ConfigError("confusion matrix index out of range");
  return counts_[actual * size() + predicted];
}

std::int64_t ConfusionMatrix::row_total(std::size_t actual) const {
  std::int64_t sum = unclassified_.at(actual);
  for (std::size_t p = 0; p < size(); ++p) sum += at(actual, p);
  return sum;
}

std::int64_t ConfusionMatrix::total() const {
  std::int64_t sum = 0;
  for (std::size_t a = 0; a < size(); ++a) sum += row_total(a);
  return sum;
}

std::int64_t ConfusionMatrix::trace() const {
  std::int64_t sum = 0;
  for (std::size_t a = 0; a < size(); ++a) sum += at(a, a);
  return sum;
}

double ConfusionMatrix::accuracy(std::size_t actual) const {
  const auto row = row_total(actual);
  return row == 0 ? 0.0 : static_cast<double>(at(actual, actual)) / static_cast<double>(row);
}

double ConfusionMatrix::overall_accuracy() const {
  const auto t = total();
  return t == 0 ? 0.0 : static_cast<double>(trace()) / static_cast<double>(t);
}

namespace {

ConfusionMatrix aggregate(const FrequencyModel& model, const std::vector<DocumentScore>& scores) {
  ConfusionMatrix m(model.disciplines());
  for (const auto& s : scores) m.add(*model.discipline_index(s.actual), model.discipline_index(s.predicted));
  return m;
}

}  // namespace

ClassificationResult classify_all(const FrequencyModel& model, std::span<const Document> documents,
                                  const ClassifyOptions& options) {
  std::vector<DocumentScore> scores(documents.size());
  std::vector<std::exception_ptr> errors(documents.size());
  const auto size = static_cast<std::ptrdiff_t>(documents.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      scores[k] = score_document(documents[k], model, options);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  auto matrix = aggregate(model, scores);
  return {std::move(scores), std::move(matrix)};
}

namespace serial {

ClassificationResult classify_all(const FrequencyModel& model, std::span<const Document> documents,
                                  const ClassifyOptions& options) {
  std::vector<DocumentScore> scores;
  scores.reserve(documents.size());
  for (const auto& doc : documents) scores.push_back(score_document(doc, model, options));
  auto matrix = aggregate(model, scores);
  return {std::move(scores), std::move(matrix)};
}

}  // namespace serial

}  // namespace sublang
