#include "sublang/ranking.hpp"

#include <algorithm>

#include "sublang/error.hpp"
#include "sublang/poisson.hpp"

namespace sublang {

bool ranks_before(const RankedTerm& a, const RankedTerm& b) {
  if (a.percentile != b.percentile) return a.percentile > b.percentile;
  if (a.count_in_db != b.count_in_db) return a.count_in_db > b.count_in_db;
  return a.term < b.term;
}

namespace {

std::vector<RankedTerm> unscored_entries(const FrequencyModel& model, std::size_t d) {
  const double n = static_cast<double>(model.discipline_count());
  std::vector<RankedTerm> entries;
  for (auto& tf : model.discipline_vocabulary(d)) {
    const double lambda = static_cast<double>(model.global_count(tf.term)) / n;
    entries.push_back({std::move(tf.term), tf.frequency, lambda, 0.0});
  }
  return entries;
}

}  // namespace

RankedList rank_terms(const FrequencyModel& model, std::string_view discipline) {
  const std::size_t d = model.require_discipline(discipline);
  auto entries = unscored_entries(model, d);
  const auto size = static_cast<std::ptrdiff_t>(entries.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    auto& e = entries[static_cast<std::size_t>(i)];
    e.percentile = poisson::percentile(e.count_in_db, e.lambda);
  }

  std::sort(entries.begin(), entries.end(), ranks_before);
  return {model.disciplines()[d], std::move(entries)};
}

std::vector<RankedList> rank_all(const FrequencyModel& model) {
  std::vector<RankedList> out;
  out.reserve(model.discipline_count());
  for (const auto& label : model.disciplines()) out.push_back(rank_terms(model, label));
  return out;
}

RankSlices top_bottom(const RankedList& ranked, std::size_t k,
                      const std::optional<std::set<std::string, std::less<>>>& filter) {
  if (k == 0) throw ConfigError("slice size must be positive");
  std::vector<const RankedTerm*> kept;
  for (const auto& e : ranked.entries) {
    if (!filter || filter->count(e.term) > 0) kept.push_back(&e);
  }
  if (kept.size() < 2 * k)
    throw ConfigError("need at least " + std::to_string(2 * k) + " ranked terms for '" +
                      ranked.discipline + "', only " + std::to_string(kept.size()) + " available");
  RankSlices slices;
  for (std::size_t i = 0; i < k; ++i) slices.top.push_back(*kept[i]);
  for (std::size_t i = kept.size() - k; i < kept.size(); ++i) slices.bottom.push_back(*kept[i]);
  return slices;
}

namespace serial {

RankedList rank_terms(const FrequencyModel& model, std::string_view discipline) {
  const std::size_t d = model.require_discipline(discipline);
  auto entries = unscored_entries(model, d);
  for (auto& e : entries) e.percentile = poisson::percentile(e.count_in_db, e.lambda);
  std::sort(entries.begin(), entries.end(), ranks_before);
  return {model.disciplines()[d], std::move(entries)};
}

}  // namespace serial

}  // namespace sublang
