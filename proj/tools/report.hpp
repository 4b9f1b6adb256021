#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

namespace sublang::cli {

// Text renderings of the per-command JSON summaries, shaped like the
// classic sublanguage-study tables.

std::string render_table1(const nlohmann::ordered_json& ingest);
std::string render_rank_slices(const nlohmann::ordered_json& rank);
std::string render_coverage(const std::vector<nlohmann::ordered_json>& code_summaries);
std::string render_measures(const nlohmann::ordered_json& measure);
std::string render_confusion(const nlohmann::ordered_json& classify);
std::string render_accuracy_by_mode(const std::vector<nlohmann::ordered_json>& classify_summaries);

/// Everything renderable from the summaries present in `dir`.
std::string render_report(const std::filesystem::path& dir);

}  // namespace sublang::cli
