#include "run_config.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "sublang/error.hpp"

namespace sublang::cli {

namespace {

using nlohmann::json;

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::string as_string(const json& j, const char* key) {
  if (!j.is_string()) throw ConfigError(std::string("config key '") + key + "' must be a string");
  return j.get<std::string>();
}

}  // namespace

void merge_config_file(RunConfig& cfg, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path.string() + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  const fs::path base = path.parent_path();

  auto set_path = [&](fs::path& field, const char* key) {
    if (field.empty() && j.contains(key)) field = resolve(base, as_string(j[key], key));
  };
  set_path(cfg.corpus, "corpus");
  set_path(cfg.stopwords, "stopwords");
  set_path(cfg.model, "model");
  set_path(cfg.general_headwords, "general_headwords");
  set_path(cfg.annotations, "annotations");
  set_path(cfg.mu_table, "mu_table");
  set_path(cfg.sample_file, "sample_file");
  set_path(cfg.candidates, "candidates");
  set_path(cfg.out, "out");

  auto set_map = [&](std::map<std::string, fs::path>& field, const char* key) {
    if (!field.empty() || !j.contains(key)) return;
    if (!j[key].is_object()) throw ConfigError(std::string("config key '") + key + "' must be an object");
    for (const auto& [k, v] : j[key].items()) field[k] = resolve(base, as_string(v, key));
  };
  set_map(cfg.headwords, "headwords");
  set_map(cfg.sl_terms, "sl_terms");

  if (cfg.groups.empty() && j.contains("groups")) {
    if (!j["groups"].is_object()) throw ConfigError("config key 'groups' must be an object");
    for (const auto& [name, members] : j["groups"].items()) {
      Group g{name, {}};
      for (const auto& m : members) g.members.push_back(as_string(m, "groups"));
      cfg.groups.push_back(std::move(g));
    }
  }
  if (cfg.disciplines.empty() && j.contains("disciplines")) {
    for (const auto& d : j["disciplines"]) cfg.disciplines.push_back(as_string(d, "disciplines"));
  }
  auto set_string = [&](std::string& field, const char* key) {
    if (field.empty() && j.contains(key)) field = as_string(j[key], key);
  };
  set_string(cfg.discipline, "discipline");
  set_string(cfg.mode, "mode");
  set_string(cfg.fallback, "fallback");
  if (!cfg.seed && j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (cfg.sample_size == 0 && j.contains("sample_size")) cfg.sample_size = j["sample_size"].get<std::size_t>();
  if (cfg.top == 0 && j.contains("top")) cfg.top = j["top"].get<std::size_t>();
  if (!cfg.token_multiplicity && j.contains("token_multiplicity"))
    cfg.token_multiplicity = j["token_multiplicity"].get<bool>();
  if (!cfg.sample_variance && j.contains("sample_variance")) cfg.sample_variance = j["sample_variance"].get<bool>();
}

fs::path resolve_out_dir(const std::string& flag_value, const fs::path& config_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SUBLANG_OUT_DIR"); env && *env) return env;
  if (!config_value.empty()) return config_value;
  return "sublang_out";
}

Group parse_group(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("group '" + spec + "' must look like name=a,b,c");
  Group g{spec.substr(0, eq), {}};
  std::string rest = spec.substr(eq + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const auto item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) g.members.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (g.members.empty()) throw ConfigError("group '" + g.name + "' has no members");
  return g;
}

std::pair<std::string, fs::path> parse_keyed_path(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
    throw ConfigError("'" + spec + "' must look like discipline=path");
  return {spec.substr(0, eq), spec.substr(eq + 1)};
}

}  // namespace sublang::cli
