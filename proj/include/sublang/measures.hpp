#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sublang {

/// Annotated sense of one term occurrence relative to its dictionary entry:
/// same/different sense crossed with sublanguage/general usage.
enum class UsageCategory : int { SSL = 0, SG = 1, DSL = 2, DG = 3 };

inline constexpr std::size_t kUsageCategoryCount = 4;

std::string_view to_string(UsageCategory category);
UsageCategory parse_usage_category(std::string_view text);

enum class Slice : int { Top = 0, Bottom = 1 };

std::string_view to_string(Slice slice);
Slice parse_slice(std::string_view text);

/// Occurrence counts (or percentages) per usage category.
struct UsageCounts {
  double ssl = 0.0;
  double sg = 0.0;
  double dsl = 0.0;
  double dg = 0.0;

  double total() const { return ssl + sg + dsl + dg; }
  double& operator[](UsageCategory c);
  double operator[](UsageCategory c) const;
  /// Same counts rescaled to sum to 100. Throws UndefinedMeasure on a zero total.
  UsageCounts as_percentages() const;
};

using TermSet = std::set<std::string, std::less<>>;

/// Share of occurrences used in a sublanguage sense: (SSL + DSL) / total.
/// Throws UndefinedMeasure when the total is not positive or a count is negative.
double m_u(const UsageCounts& counts);

/// ln(mu_top / mu_bottom). Throws UndefinedMeasure unless both are positive.
double m_delta(double mu_top, double mu_bottom);

/// 1 - |sl ∩ general| / |sl|. Throws UndefinedMeasure for an empty `sl_terms`.
double distinctiveness_general(const TermSet& sl_terms, const TermSet& general_terms);

/// 1 - |x ∩ y| / |x|; asymmetric. Throws UndefinedMeasure for an empty `sl_x`.
double distinctiveness_pairwise(const TermSet& sl_x, const TermSet& sl_y);

/// Top and bottom slice counts for one discipline.
struct SliceCounts {
  std::optional<UsageCounts> top;
  std::optional<UsageCounts> bottom;
};

using AnnotationTable = std::map<std::string, SliceCounts>;

enum class VarianceKind { Population, Sample };

struct CategoryStat {
  double mean = 0.0;
  double variance = 0.0;
};

struct GroupProfile {
  std::string name;
  std::vector<std::string> members;
  std::array<CategoryStat, kUsageCategoryCount> top{};
  std::array<CategoryStat, kUsageCategoryCount> bottom{};
};

struct Group {
  std::string name;
  std::vector<std::string> members;
};

/// Per-group, per-slice, per-category mean and variance of the disciplines'
/// percentage profiles. Throws ConfigError when the grouping does not cover
/// every annotated discipline exactly once or names an unannotated one, and
/// when a discipline lacks a slice.
std::vector<GroupProfile> usage_profile(const AnnotationTable& annotations,
                                        const std::vector<Group>& grouping,
                                        VarianceKind variance = VarianceKind::Population);

struct MeasureReport {
  std::string discipline;
  double mu_top = 0.0;
  double mu_bottom = 0.0;
  std::optional<double> m_delta;  // empty when either M_u is zero
};

/// m_u of both slices and their m_delta for each annotated discipline.
std::vector<MeasureReport> measure_reports(const AnnotationTable& annotations);

}  // namespace sublang
