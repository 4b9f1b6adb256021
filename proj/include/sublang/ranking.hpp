#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sublang/corpus.hpp"

namespace sublang {

struct RankedTerm {
  std::string term;
  std::int64_t count_in_db = 0;
  double lambda = 0.0;      // global count / number of disciplines
  double percentile = 0.0;  // Pr(X <= count_in_db), X ~ Poisson(lambda)

  friend bool operator==(const RankedTerm&, const RankedTerm&) = default;
};

/// Entries ordered by descending percentile, then descending count, then term.
struct RankedList {
  std::string discipline;
  std::vector<RankedTerm> entries;
};

/// The ordering RankedList maintains.
bool ranks_before(const RankedTerm& a, const RankedTerm& b);

/// Ranks every term occurring at least once in `discipline` by its Poisson
/// percentile. Percentiles are computed in parallel. Throws ConfigError for an
/// unknown discipline.
RankedList rank_terms(const FrequencyModel& model, std::string_view discipline);

/// One RankedList per registered discipline, in registration order.
std::vector<RankedList> rank_all(const FrequencyModel& model);

struct RankSlices {
  std::vector<RankedTerm> top;
  std::vector<RankedTerm> bottom;  // in list order, worst last
};

/// First and last k entries of the list, optionally restricted to `filter`.
/// Throws ConfigError if k == 0 or fewer than 2k entries survive the filter.
RankSlices top_bottom(const RankedList& ranked, std::size_t k,
                      const std::optional<std::set<std::string, std::less<>>>& filter = std::nullopt);

namespace serial {

/// Single-threaded reference for rank_terms().
RankedList rank_terms(const FrequencyModel& model, std::string_view discipline);

}  // namespace serial

}  // namespace sublang
