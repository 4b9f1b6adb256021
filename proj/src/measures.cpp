#include "sublang/measures.hpp"

#include <algorithm>
#include <cmath>

#include "sublang/error.hpp"

namespace sublang {

std::string_view to_string(UsageCategory category) {
  switch (category) {
    case UsageCategory::SSL:
      return "SSL";
    case UsageCategory::SG:
      return "SG";
    case UsageCategory::DSL:
      return "DSL";
    case UsageCategory::DG:
      return "DG";
  }
  return "SSL";
}

UsageCategory parse_usage_category(std::string_view text) {
  if (text == "SSL" || text == "ssl") return UsageCategory::SSL;
  if (text == "SG" || text == "sg") return UsageCategory::SG;
  if (text == "DSL" || text == "dsl") return UsageCategory::DSL;
  if (text == "DG" || text == "dg") return UsageCategory::DG;
  throw ConfigError("unknown usage category '" + std::string(text) + "' (expected SSL|SG|DSL|DG)");
}

std::string_view to_string(Slice slice) { return slice == Slice::Top ? "top" : "bottom"; }

Slice parse_slice(std::string_view text) {
  if (text == "top") return Slice::Top;
  if (text == "bottom") return Slice::Bottom;
  throw ConfigError("unknown slice '" + std::string(text) + "' (expected top|bottom)");
}

double& UsageCounts::operator[](UsageCategory c) {
  switch (c) {
    case UsageCategory::SSL:
      return ssl;
    case UsageCategory::SG:
      return sg;
    case UsageCategory::DSL:
      return dsl;
    case UsageCategory::DG:
      return dg;
  }
  return ssl;
}

double UsageCounts::operator[](UsageCategory c) const { return const_cast<UsageCounts&>(*this)[c]; }

UsageCounts UsageCounts::as_percentages() const {
  const double t = total();
  if (!(t > 0.0)) throw UndefinedMeasure("usage counts sum to zero");
  return {100.0 * ssl / t, 100.0 * sg / t, 100.0 * dsl / t, 100.0 * dg / t};
}

double m_u(const UsageCounts& counts) {
  if (counts.ssl < 0 || counts.sg < 0 || counts.dsl < 0 || counts.dg < 0)
    throw UndefinedMeasure("M_u: negative usage count");
  const double total = counts.total();
  if (!(total > 0.0)) throw UndefinedMeasure("M_u: no annotated occurrences");
  return (counts.ssl + counts.dsl) / total;
}

double m_delta(double mu_top, double mu_bottom) {
  if (!(mu_top > 0.0) || !(mu_bottom > 0.0))
    throw UndefinedMeasure("M_delta: both M_u values must be positive (top=" + std::to_string(mu_top) +
                           ", bottom=" + std::to_string(mu_bottom) + ")");
  return std::log(mu_top) - std::log(mu_bottom);
}

namespace {

double uncovered_fraction(const TermSet& base, const TermSet& other, const char* what) {
  if (base.empty()) throw UndefinedMeasure(std::string(what) + ": empty sublanguage term set");
  std::size_t shared = 0;
  for (const auto& t : base) shared += other.count(t);
  return 1.0 - static_cast<double>(shared) / static_cast<double>(base.size());
}

}  // namespace

double distinctiveness_general(const TermSet& sl_terms, const TermSet& general_terms) {
  return uncovered_fraction(sl_terms, general_terms, "D_{S,G}");
}

double distinctiveness_pairwise(const TermSet& sl_x, const TermSet& sl_y) {
  return uncovered_fraction(sl_x, sl_y, "D_{x,y}");
}

std::vector<GroupProfile> usage_profile(const AnnotationTable& annotations,
                                        const std::vector<Group>& grouping, VarianceKind variance) {
  std::map<std::string, std::string, std::less<>> owner;
  for (const auto& g : grouping) {
    if (g.members.empty()) throw ConfigError("group '" + g.name + "' has no members");
    for (const auto& m : g.members) {
      if (!owner.emplace(m, g.name).second)
        throw ConfigError("discipline '" + m + "' appears in more than one group");
      if (annotations.find(m) == annotations.end())
        throw ConfigError("group '" + g.name + "' names unannotated discipline '" + m + "'");
    }
  }
  for (const auto& [disc, slices] : annotations) {
    if (owner.find(disc) == owner.end()) throw ConfigError("discipline '" + disc + "' is not in any group");
    if (!slices.top) throw ConfigError("discipline '" + disc + "' has no top-slice annotations");
    if (!slices.bottom) throw ConfigError("discipline '" + disc + "' has no bottom-slice annotations");
  }

  auto stats = [&](const std::vector<std::string>& members, Slice slice) {
    std::array<CategoryStat, kUsageCategoryCount> out{};
    std::vector<UsageCounts> rows;
    for (const auto& m : members) {
      const auto& sc = annotations.at(m);
      rows.push_back((slice == Slice::Top ? *sc.top : *sc.bottom).as_percentages());
    }
    const double n = static_cast<double>(rows.size());
    for (std::size_t c = 0; c < kUsageCategoryCount; ++c) {
      const auto cat = static_cast<UsageCategory>(c);
      double sum = 0.0;
      for (const auto& r : rows) sum += r[cat];
      const double mean = sum / n;
      double ss = 0.0;
      for (const auto& r : rows) ss += (r[cat] - mean) * (r[cat] - mean);
      const double denom = variance == VarianceKind::Sample ? n - 1.0 : n;
      out[c] = {mean, denom > 0.0 ? ss / denom : 0.0};
    }
    return out;
  };

  std::vector<GroupProfile> profiles;
  for (const auto& g : grouping) {
    profiles.push_back({g.name, g.members, stats(g.members, Slice::Top), stats(g.members, Slice::Bottom)});
  }
  return profiles;
}

std::vector<MeasureReport> measure_reports(const AnnotationTable& annotations) {
  std::vector<MeasureReport> out;
  for (const auto& [disc, slices] : annotations) {
    if (!slices.top || !slices.bottom)
      throw ConfigError("discipline '" + disc + "' needs both top and bottom annotations");
    MeasureReport r{disc, m_u(*slices.top), m_u(*slices.bottom), std::nullopt};
    if (r.mu_top > 0.0 && r.mu_bottom > 0.0) r.m_delta = m_delta(r.mu_top, r.mu_bottom);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sublang
