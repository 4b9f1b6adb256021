#include "sublang/corpus.hpp"

#include <algorithm>
#include <unordered_set>

#include "sublang/error.hpp"
#include "sublang/tokenize.hpp"

namespace sublang {

std::string_view to_string(FieldMode mode) {
  switch (mode) {
    case FieldMode::TitleOnly:
      return "title";
    case FieldMode::AbstractOnly:
      return "abstract";
    case FieldMode::Both:
      return "both";
  }
  return "both";
}

FieldMode parse_field_mode(std::string_view text) {
  if (text == "title") return FieldMode::TitleOnly;
  if (text == "abstract") return FieldMode::AbstractOnly;
  if (text == "both") return FieldMode::Both;
  throw ConfigError("unknown field mode '" + std::string(text) + "' (expected title|abstract|both)");
}

std::vector<std::string> Document::terms(FieldMode mode) const {
  std::vector<std::string> out;
  if (mode != FieldMode::AbstractOnly) out.insert(out.end(), title_terms.begin(), title_terms.end());
  if (mode != FieldMode::TitleOnly) out.insert(out.end(), abstract_terms.begin(), abstract_terms.end());
  return out;
}

Document make_document(std::string id, std::string discipline, std::string_view title,
                       std::string_view abstract) {
  return Document{std::move(id), std::move(discipline), tokenize(title), tokenize(abstract)};
}

StopwordList::StopwordList(const std::vector<std::string>& terms) {
  for (const auto& t : terms) {
    if (!is_normalized_token(t)) throw ConfigError("stopword '" + t + "' is not a normalized token");
    terms_.insert(t);
  }
}

// ---------------------------------------------------------------------------

FrequencyModel FrequencyModel::from_tables(std::vector<std::string> disciplines, FieldMode mode,
                                           StopwordList stopwords, TermTable terms,
                                           std::vector<std::size_t> document_counts,
                                           std::vector<std::int64_t> token_counts) {
  FrequencyModel m;
  m.disciplines_ = std::move(disciplines);
  m.mode_ = mode;
  m.stopwords_ = std::move(stopwords);
  m.terms_ = std::move(terms);
  m.document_counts_ = std::move(document_counts);
  m.token_counts_ = std::move(token_counts);
  m.check_invariants();
  return m;
}

void FrequencyModel::check_invariants() const {
  const std::size_t n = disciplines_.size();
  if (n < 2) throw ConfigError("a frequency model needs at least 2 disciplines, got " + std::to_string(n));
  std::unordered_set<std::string_view> seen;
  for (const auto& d : disciplines_) {
    if (d.empty()) throw ConfigError("empty discipline label");
    if (!seen.insert(d).second) throw ConfigError("duplicate discipline label '" + d + "'");
  }
  if (document_counts_.size() != n || token_counts_.size() != n)
    throw ConfigError("per-discipline totals do not match the discipline count");

  std::vector<std::int64_t> tokens(n, 0);
  for (const auto& [term, counts] : terms_) {
    if (counts.per_db.size() != n) throw ConfigError("term '" + term + "' has wrong number of counts");
    if (stopwords_.contains(term)) throw ConfigError("stopword '" + term + "' present in model");
    std::int64_t sum = 0;
    for (std::size_t d = 0; d < n; ++d) {
      if (counts.per_db[d] < 0) throw ConfigError("negative count for term '" + term + "'");
      sum += counts.per_db[d];
      tokens[d] += counts.per_db[d];
    }
    if (counts.global < 1) throw ConfigError("term '" + term + "' has global count < 1");
    if (sum != counts.global)
      throw ConfigError("term '" + term + "': per-discipline counts sum to " + std::to_string(sum) +
                        " but global count is " + std::to_string(counts.global));
  }
  if (tokens != token_counts_) throw ConfigError("per-discipline token totals disagree with term table");
}

std::optional<std::size_t> FrequencyModel::discipline_index(std::string_view label) const {
  auto it = std::find(disciplines_.begin(), disciplines_.end(), label);
  if (it == disciplines_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - disciplines_.begin());
}

std::size_t FrequencyModel::require_discipline(std::string_view label) const {
  if (auto idx = discipline_index(label)) return *idx;
  throw ConfigError("unknown discipline '" + std::string(label) + "'");
}

const TermCounts* FrequencyModel::find(const std::string& term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? nullptr : &it->second;
}

std::int64_t FrequencyModel::count(std::size_t discipline, const std::string& term) const {
  const TermCounts* c = find(term);
  return c ? c->per_db.at(discipline) : 0;
}

std::int64_t FrequencyModel::global_count(const std::string& term) const {
  const TermCounts* c = find(term);
  return c ? c->global : 0;
}

std::vector<TermFrequency> FrequencyModel::discipline_vocabulary(std::size_t discipline) const {
  std::vector<TermFrequency> out;
  for (const auto& [term, counts] : terms_) {
    const auto c = counts.per_db.at(discipline);
    if (c > 0) out.push_back({term, c});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.term < b.term; });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void validate_document(const Document& doc) {
  if (doc.id.empty()) throw IngestError("document with empty id");
  if (doc.discipline.empty()) throw IngestError(doc.id, "missing discipline label");
  for (const auto* field : {&doc.title_terms, &doc.abstract_terms}) {
    for (const auto& t : *field) {
      if (!is_normalized_token(t)) throw IngestError(doc.id, "malformed token '" + t + "'");
    }
  }
}

}  // namespace

FrequencyModel build_model(std::span<const Document> documents, const StopwordList& stopwords,
                           FieldMode mode) {
  std::vector<std::string> labels;
  for (const auto& doc : documents) {
    validate_document(doc);
    if (std::find(labels.begin(), labels.end(), doc.discipline) == labels.end())
      labels.push_back(doc.discipline);
  }
  return build_model(documents, stopwords, mode, std::move(labels));
}

FrequencyModel build_model(std::span<const Document> documents, const StopwordList& stopwords,
                           FieldMode mode, std::vector<std::string> disciplines) {
  if (documents.empty()) throw IngestError("corpus contains no documents");
  if (disciplines.size() < 2)
    throw ConfigError("at least 2 disciplines are required, got " + std::to_string(disciplines.size()));

  const std::size_t n = disciplines.size();
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t d = 0; d < n; ++d) {
    if (!index.emplace(disciplines[d], d).second)
      throw ConfigError("duplicate discipline label '" + disciplines[d] + "'");
  }

  FrequencyModel::TermTable terms;
  std::vector<std::size_t> doc_counts(n, 0);
  std::vector<std::int64_t> token_counts(n, 0);
  std::unordered_set<std::string_view> ids;

  for (const auto& doc : documents) {
    validate_document(doc);
    if (!ids.insert(doc.id).second) throw IngestError(doc.id, "duplicate document id");
    auto it = index.find(doc.discipline);
    if (it == index.end()) throw IngestError(doc.id, "unknown discipline '" + doc.discipline + "'");
    const std::size_t d = it->second;
    ++doc_counts[d];

    auto add = [&](const std::vector<std::string>& field) {
      for (const auto& tok : field) {
        if (stopwords.contains(tok)) continue;
        auto& c = terms[tok];
        if (c.per_db.empty()) c.per_db.assign(n, 0);
        ++c.per_db[d];
        ++c.global;
        ++token_counts[d];
      }
    };
    if (mode != FieldMode::AbstractOnly) add(doc.title_terms);
    if (mode != FieldMode::TitleOnly) add(doc.abstract_terms);
  }

  return FrequencyModel::from_tables(std::move(disciplines), mode, stopwords, std::move(terms),
                                     std::move(doc_counts), std::move(token_counts));
}

std::vector<TermFrequency> sorted_by_frequency(const FrequencyModel& model,
                                               std::string_view discipline) {
  auto vocab = model.discipline_vocabulary(model.require_discipline(discipline));
  std::stable_sort(vocab.begin(), vocab.end(),
                   [](const auto& a, const auto& b) { return a.frequency > b.frequency; });
  return vocab;
}

std::vector<TermFrequency> systematic_sample(const FrequencyModel& model,
                                             std::string_view discipline, std::size_t k) {
  auto sorted = sorted_by_frequency(model, discipline);
  const std::size_t v = sorted.size();
  if (k == 0) throw ConfigError("sample size must be positive");
  if (k > v)
    throw ConfigError("sample size " + std::to_string(k) + " exceeds vocabulary size " +
                      std::to_string(v) + " of '" + std::string(discipline) + "'");
  const std::size_t stride = v / k;
  std::vector<TermFrequency> sample;
  sample.reserve(k);
  for (std::size_t i = 0; sample.size() < k; i += stride) sample.push_back(std::move(sorted[i]));
  return sample;
}

}  // namespace sublang
