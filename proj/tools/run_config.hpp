#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sublang/measures.hpp"

namespace sublang::cli {

namespace fs = std::filesystem;

/// Everything a command may read. Command-line flags take precedence over
/// the declarative config file; SUBLANG_OUT_DIR overrides the config's "out".
struct RunConfig {
  fs::path corpus;
  fs::path stopwords;
  fs::path model;
  fs::path general_headwords;
  fs::path annotations;
  fs::path mu_table;
  fs::path sample_file;
  fs::path candidates;
  std::map<std::string, fs::path> headwords;  // discipline -> headword file
  std::map<std::string, fs::path> sl_terms;   // discipline -> term-set file
  std::vector<Group> groups;
  std::vector<std::string> disciplines;
  std::string discipline;
  std::string mode;
  std::string fallback;
  std::optional<std::uint64_t> seed;
  std::size_t sample_size = 0;
  std::size_t top = 0;
  bool token_multiplicity = false;
  bool sample_variance = false;
  bool serial = false;
  fs::path out;
};

/// Fills fields of `cfg` still at their defaults from a JSON config file.
/// Relative paths resolve against the config file's directory.
void merge_config_file(RunConfig& cfg, const fs::path& path);

/// Output directory: flag, then SUBLANG_OUT_DIR, then config, then "sublang_out".
fs::path resolve_out_dir(const std::string& flag_value, const fs::path& config_value);

/// "name=a,b,c" -> Group.
Group parse_group(const std::string& spec);

/// "key=path" -> pair.
std::pair<std::string, fs::path> parse_keyed_path(const std::string& spec);

}  // namespace sublang::cli
