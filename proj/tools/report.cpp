#include "report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>

#include "sublang/dictcov.hpp"
#include "sublang/error.hpp"

namespace sublang::cli {

using nlohmann::ordered_json;

namespace {

std::optional<ordered_json> load(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    return ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError("summary '" + p.string() + "' is not valid JSON: " + e.what());
  }
}

std::string join_terms(const ordered_json& arr) {
  std::string s;
  for (const auto& e : arr) {
    if (!s.empty()) s += ", ";
    s += e["term"].get<std::string>();
  }
  return s;
}

}  // namespace

std::string render_table1(const ordered_json& j) {
  std::string s = fmt::format("Documents and words per discipline (mode: {})\n", j["mode"].get<std::string>());
  s += fmt::format("{:<24}{:>10}{:>10}{:>12}\n", "Domain", "Docs", "Words", "Words/doc");
  std::int64_t docs = 0, words = 0;
  for (const auto& d : j["disciplines"]) {
    const auto n = d["documents"].get<std::int64_t>();
    const auto w = d["words"].get<std::int64_t>();
    docs += n;
    words += w;
    s += fmt::format("{:<24}{:>10}{:>10}{:>12.1f}\n", d["label"].get<std::string>(), n, w,
                     n ? static_cast<double>(w) / static_cast<double>(n) : 0.0);
  }
  s += fmt::format("{:<24}{:>10}{:>10}{:>12.1f}\n", "Combined", docs, words,
                   docs ? static_cast<double>(words) / static_cast<double>(docs) : 0.0);
  return s;
}

std::string render_rank_slices(const ordered_json& j) {
  const auto k = j["slice"].get<std::size_t>();
  std::string s = fmt::format("The {} top and {} bottom ranked terms per discipline\n", k, k);
  for (const auto& d : j["disciplines"]) {
    if (!d.contains("top")) {
      s += fmt::format("{:<12} (only {} ranked terms)\n", d["label"].get<std::string>(), d["terms"].get<std::size_t>());
      continue;
    }
    s += fmt::format("{:<12} top:    {}\n", d["label"].get<std::string>(), join_terms(d["top"]));
    s += fmt::format("{:<12} bottom: {}\n", "", join_terms(d["bottom"]));
  }
  return s;
}

std::string render_coverage(const std::vector<ordered_json>& summaries) {
  if (summaries.empty()) return {};
  static constexpr std::array<const char*, 4> kHeads{"Not in Dict.", "Exact Match", "Start of Phrase", "Term Variant"};
  std::string pct = fmt::format("Percent of sampled terms by dictionary status\n{:<16}", "Database");
  std::string avg = fmt::format("Average term frequency by dictionary status\n{:<16}", "Database");
  for (const char* h : kHeads) {
    pct += fmt::format("{:>17}", h);
    avg += fmt::format("{:>17}", h);
  }
  pct += "\n";
  avg += "\n";

  std::vector<CoverageReport> reports;
  for (const auto& j : summaries) {
    CoverageReport r;
    pct += fmt::format("{:<16}", j["label"].get<std::string>());
    avg += fmt::format("{:<16}", j["label"].get<std::string>());
    for (std::size_t c = 0; c < kCoverageCodeCount; ++c) {
      const auto& row = j["codes"][c];
      pct += fmt::format("{:>17}", std::lround(row["percent"].get<double>()));
      if (row["mean_frequency"].is_null()) {
        avg += fmt::format("{:>17}", "-");
      } else {
        r.mean_frequency[c] = row["mean_frequency"].get<double>();
        avg += fmt::format("{:>17.2f}", *r.mean_frequency[c]);
      }
    }
    pct += "\n";
    avg += "\n";
    reports.push_back(r);
  }
  const auto means = average_means(reports);
  const auto change = percent_change_row(means);
  avg += fmt::format("{:<16}", "Averages:");
  for (const auto& m : means) avg += m ? fmt::format("{:>17.2f}", *m) : fmt::format("{:>17}", "-");
  avg += fmt::format("\n{:<16}", "% change");
  for (const auto& c : change) avg += c ? fmt::format("{:>17}", fmt::format("{:+d}%", *c)) : fmt::format("{:>17}", "undefined");
  avg += "\n";
  return pct + "\n" + avg;
}

std::string render_measures(const ordered_json& j) {
  std::string s;
  if (j.contains("groups")) {
    s += fmt::format("Usage of top and bottom sublanguage words ({} variance)\n{:<10}", j["variance"].get<std::string>(), "");
    for (const auto& g : j["groups"]) s += fmt::format("{:>22}", g["name"].get<std::string>());
    s += fmt::format("\n{:<10}", "");
    for (std::size_t i = 0; i < j["groups"].size(); ++i) s += fmt::format("{:>11}{:>11}", "ave%", "var");
    s += "\n";
    for (const char* slice : {"top", "bottom"}) {
      s += fmt::format("{} 1's\n", slice == std::string("top") ? "Top" : "Bottom");
      for (const char* cat : {"SSL", "SG", "DSL", "DG"}) {
        s += fmt::format("  {:<8}", cat);
        for (const auto& g : j["groups"])
          s += fmt::format("{:>11.1f}{:>11.1f}", g[slice][cat]["mean"].get<double>(), g[slice][cat]["variance"].get<double>());
        s += "\n";
      }
    }
    s += "\n";
  }
  if (j.contains("measures")) {
    for (const char* source : {"annotations", "mu_table"}) {
      bool header = false;
      for (const auto& r : j["measures"]) {
        if (r.value("source", "annotations") != source) continue;
        if (!header) {
          const bool table = source == std::string("mu_table");
          s += fmt::format("Measures of sublanguage characteristics (from {})\n{:<12}{:>10}{:>12}{:>10}{:>11}\n",
                           table ? "M_u table" : "annotations", "DB", "M_u Top", "M_u Bottom", "M_delta",
                           table ? "Published" : "");
          header = true;
        }
        s += fmt::format("{:<12}{:>10.3f}{:>12.3f}", r["label"].get<std::string>(), r["mu_top"].get<double>(),
                         r["mu_bottom"].get<double>());
        s += r["m_delta"].is_null() ? fmt::format("{:>10}", "undefined")
                                    : fmt::format("{:>10.3f}", r["m_delta"].get<double>());
        if (r.contains("published_m_delta")) s += fmt::format("{:>11.3f}", r["published_m_delta"].get<double>());
        s += "\n";
      }
      if (header) s += "\n";
    }
  }
  if (j.contains("distinctiveness")) {
    const auto& d = j["distinctiveness"];
    if (d.contains("general")) {
      s += "Distinctiveness from general language D_{S,G}\n";
      for (const auto& [label, v] : d["general"].items()) s += fmt::format("  {:<12}{:.3f}\n", label, v.get<double>());
    }
    if (!d["pairwise"].empty()) {
      s += "Pairwise distinctiveness D_{x,y} (row x, column y)\n";
      std::vector<std::string> labels;
      for (const auto& [x, row] : d["pairwise"].items()) labels.push_back(x);
      s += fmt::format("  {:<12}", "");
      for (const auto& y : labels) s += fmt::format("{:>10}", y);
      s += "\n";
      for (const auto& x : labels) {
        s += fmt::format("  {:<12}", x);
        for (const auto& y : labels)
          s += x == y || !d["pairwise"][x].contains(y) ? fmt::format("{:>10}", "-")
                                                       : fmt::format("{:>10.3f}", d["pairwise"][x][y].get<double>());
        s += "\n";
      }
    }
  }
  return s;
}

std::string render_confusion(const ordered_json& j) {
  const auto& labels = j["labels"];
  std::string s = fmt::format("Percent classification of documents (mode: {}, fallback: {})\n{:<10}",
                              j["mode"].get<std::string>(), j["fallback"].get<std::string>(), "");
  for (const auto& l : labels) s += fmt::format("{:>8}", l.get<std::string>());
  s += fmt::format("{:>8}\n", "unclass");
  for (const auto& row : j["rows"]) {
    const auto total = row["total"].get<double>();
    s += fmt::format("{:<10}", row["label"].get<std::string>());
    for (const auto& c : row["predicted"]) s += fmt::format("{:>8.1f}", total > 0 ? 100.0 * c.get<double>() / total : 0.0);
    s += fmt::format("{:>8.1f}\n", total > 0 ? 100.0 * row["unclassified"].get<double>() / total : 0.0);
  }
  s += fmt::format("overall accuracy {:.1f}%\n", 100.0 * j["overall_accuracy"].get<double>());
  return s;
}

std::string render_accuracy_by_mode(const std::vector<ordered_json>& summaries) {
  if (summaries.empty()) return {};
  std::string s = fmt::format("Percent of documents classified correctly\n{:<12}", "Domain");
  for (const auto& j : summaries) s += fmt::format("{:>10}", j["mode"].get<std::string>());
  s += "\n";
  const auto& rows = summaries.front()["rows"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s += fmt::format("{:<12}", rows[i]["label"].get<std::string>());
    for (const auto& j : summaries) s += fmt::format("{:>10.1f}", 100.0 * j["rows"][i]["accuracy"].get<double>());
    s += "\n";
  }
  s += fmt::format("{:<12}", "Overall");
  for (const auto& j : summaries) s += fmt::format("{:>10.1f}", 100.0 * j["overall_accuracy"].get<double>());
  return s + "\n";
}

std::string render_report(const std::filesystem::path& dir) {
  std::string s;
  auto section = [&](const std::string& body) {
    if (body.empty()) return;
    if (!s.empty()) s += "\n";
    s += body;
  };
  if (auto j = load(dir / "ingest_summary.json")) section(render_table1(*j));
  if (auto j = load(dir / "rank_summary.json")) section(render_rank_slices(*j));

  std::vector<std::filesystem::path> code_files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      const auto name = entry.path().filename().string();
      if (name.rfind("code_", 0) == 0 && name.size() > 13 && name.substr(name.size() - 13) == "_summary.json")
        code_files.push_back(entry.path());
    }
  }
  std::sort(code_files.begin(), code_files.end());
  std::vector<ordered_json> codes;
  for (const auto& p : code_files) codes.push_back(*load(p));
  section(render_coverage(codes));

  if (auto j = load(dir / "measure_summary.json")) section(render_measures(*j));

  std::vector<ordered_json> classify;
  for (const char* mode : {"title", "abstract", "both"}) {
    if (auto j = load(dir / fmt::format("classify_{}_summary.json", mode))) classify.push_back(*j);
  }
  section(render_accuracy_by_mode(classify));
  if (!classify.empty()) section(render_confusion(classify.back()));

  if (s.empty()) throw ConfigError("no summaries found in '" + dir.string() + "'");
  return s;
}

}  // namespace sublang::cli
