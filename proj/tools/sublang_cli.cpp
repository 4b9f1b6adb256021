// sublang: corpus statistics, sublanguage measures and Poisson-percentile
// classification from the command line. See README.md for the file formats.

#include <fmt/format.h>
#include <fmt/os.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "report.hpp"
#include "run_config.hpp"
#include "sublang/classify.hpp"
#include "sublang/corpus.hpp"
#include "sublang/dictcov.hpp"
#include "sublang/error.hpp"
#include "sublang/io.hpp"
#include "sublang/measures.hpp"
#include "sublang/ranking.hpp"
#include "sublang/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace sublang;
using namespace sublang::cli;

namespace {

constexpr std::size_t kDefaultSampleSize = 500;
constexpr std::size_t kDefaultRankSlice = 5;
constexpr std::size_t kDefaultUsageSlice = 10;

class Output {
 public:
  explicit Output(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

  const fs::path& dir() const { return dir_; }

  void write(const std::string& name, const std::string& content) const {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + (dir_ / name).string() + "'");
    out << content;
  }

  void write_json(const std::string& name, const ordered_json& j) const { write(name, j.dump(2) + "\n"); }

 private:
  fs::path dir_;
};

// Filesystem-safe label for output names.
std::string file_label(std::string_view label) {
  std::string s;
  for (unsigned char c : label) s.push_back(std::isalnum(c) || c == '-' || c == '_' ? static_cast<char>(c) : '_');
  return s;
}

std::string num(double v, int digits = 10) { return fmt::format("{:.{}g}", v, digits); }

StopwordList load_stopwords(const RunConfig& cfg) {
  return cfg.stopwords.empty() ? StopwordList{} : read_stopwords(cfg.stopwords);
}

FieldMode mode_of(const RunConfig& cfg) { return parse_field_mode(cfg.mode.empty() ? "both" : cfg.mode); }

FrequencyModel build_from_corpus(const RunConfig& cfg, std::span<const Document> docs) {
  const auto stop = load_stopwords(cfg);
  if (cfg.disciplines.empty()) return build_model(docs, stop, mode_of(cfg));
  return build_model(docs, stop, mode_of(cfg), cfg.disciplines);
}

/// The model named by --model, or one built from --corpus.
FrequencyModel load_model(const RunConfig& cfg) {
  if (!cfg.model.empty()) {
    auto m = read_model(cfg.model);
    if (!cfg.mode.empty() && parse_field_mode(cfg.mode) != m.mode())
      throw ConfigError("model '" + cfg.model.string() + "' was built in mode '" + std::string(to_string(m.mode())) +
                        "', not '" + cfg.mode + "'");
    return m;
  }
  if (cfg.corpus.empty()) throw ConfigError("either --model or --corpus is required");
  const auto docs = read_corpus(cfg.corpus);
  return build_from_corpus(cfg, docs);
}

std::vector<std::string> target_disciplines(const RunConfig& cfg, const FrequencyModel& m) {
  if (cfg.discipline.empty() || cfg.discipline == "all") return m.disciplines();
  m.require_discipline(cfg.discipline);
  return {cfg.discipline};
}

// --- commands -----------------------------------------------------------------

int cmd_synth(const SyntheticConfig& sc, const Output& out, const std::string& name) {
  const auto records = generate_corpus(sc);
  std::ostringstream text;
  write_corpus_records(text, records);
  out.write(name, text.str());
  fmt::print("wrote {} records to {}\n", records.size(), (out.dir() / name).string());
  return 0;
}

int cmd_ingest(const RunConfig& cfg, const Output& out) {
  if (cfg.corpus.empty()) throw ConfigError("ingest needs --corpus");
  const auto docs = read_corpus(cfg.corpus);
  const auto model = build_from_corpus(cfg, docs);

  std::ostringstream text;
  write_model(text, model);
  out.write("model.tsv", text.str());

  std::vector<std::int64_t> words(model.discipline_count(), 0);
  for (const auto& d : docs) words[*model.discipline_index(d.discipline)] += d.terms(model.mode()).size();

  ordered_json j;
  j["command"] = "ingest";
  j["mode"] = to_string(model.mode());
  j["stopwords"] = model.stopwords().size();
  j["vocabulary"] = model.terms().size();
  j["disciplines"] = ordered_json::array();
  for (std::size_t d = 0; d < model.discipline_count(); ++d) {
    j["disciplines"].push_back({{"label", model.disciplines()[d]},
                                {"documents", model.document_count(d)},
                                {"words", words[d]},
                                {"tokens", model.token_count(d)}});
  }
  out.write_json("ingest_summary.json", j);
  fmt::print("{}", render_table1(j));
  return 0;
}

int cmd_rank(const RunConfig& cfg, const Output& out) {
  const auto model = load_model(cfg);
  const std::size_t k = cfg.top ? cfg.top : kDefaultRankSlice;
  ordered_json summary;
  summary["command"] = "rank";
  summary["slice"] = k;
  summary["disciplines"] = ordered_json::array();

  for (const auto& label : target_disciplines(cfg, model)) {
    const auto ranked = rank_terms(model, label);
    std::string tsv = "term\tcount\tlambda\tpercentile\trank\n";
    for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
      const auto& e = ranked.entries[i];
      tsv += fmt::format("{}\t{}\t{}\t{}\t{}\n", e.term, e.count_in_db, num(e.lambda), num(e.percentile, 12), i + 1);
    }
    out.write("rank_" + file_label(label) + ".tsv", tsv);

    ordered_json entry{{"label", label}, {"terms", ranked.entries.size()}};
    if (cfg.top == 0 && ranked.entries.size() < 2 * k) {
      fmt::print(stderr, "note: '{}' has only {} ranked terms; no top/bottom slices\n", label, ranked.entries.size());
    } else {
      const auto slices = top_bottom(ranked, k);
      for (const auto* part : {&slices.top, &slices.bottom}) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : *part) arr.push_back({{"term", e.term}, {"count", e.count_in_db}, {"percentile", e.percentile}});
        entry[part == &slices.top ? "top" : "bottom"] = arr;
      }
    }
    summary["disciplines"].push_back(entry);
  }
  out.write_json("rank_summary.json", summary);
  fmt::print("{}", render_rank_slices(summary));
  return 0;
}

int cmd_sample(const RunConfig& cfg, const Output& out) {
  const auto model = load_model(cfg);
  const std::size_t k = cfg.sample_size ? cfg.sample_size : kDefaultSampleSize;
  for (const auto& label : target_disciplines(cfg, model)) {
    std::string tsv;
    for (const auto& tf : systematic_sample(model, label, k)) tsv += fmt::format("{}\t{}\n", tf.term, tf.frequency);
    out.write("sample_" + file_label(label) + ".tsv", tsv);
    fmt::print("{}\t{} terms\n", label, k);
  }
  return 0;
}

ordered_json coverage_json(const std::string& label, const CoverageReport& r) {
  ordered_json codes = ordered_json::array();
  for (std::size_t c = 0; c < kCoverageCodeCount; ++c) {
    ordered_json row{{"code", c}, {"terms", r.counts[c]}, {"percent", r.percent[c]}};
    row["mean_frequency"] = r.mean_frequency[c] ? ordered_json(*r.mean_frequency[c]) : ordered_json(nullptr);
    row["percent_change"] = r.percent_change[c] ? ordered_json(*r.percent_change[c]) : ordered_json(nullptr);
    codes.push_back(row);
  }
  return {{"command", "code"}, {"label", label}, {"total", r.total}, {"codes", codes}};
}

int cmd_code(const RunConfig& cfg, const Output& out) {
  std::vector<std::string> labels;
  if (!cfg.discipline.empty()) {
    labels.push_back(cfg.discipline);
  } else {
    for (const auto& [label, path] : cfg.headwords) labels.push_back(label);
  }
  if (labels.empty()) throw ConfigError("code needs --discipline or headword files (--headwords disc=path)");
  if (!cfg.sample_file.empty() && labels.size() != 1)
    throw ConfigError("--sample-file applies to a single --discipline");

  std::optional<FrequencyModel> model;
  std::optional<TermSet> candidates;
  if (!cfg.candidates.empty()) candidates = read_term_set(cfg.candidates);

  for (const auto& label : labels) {
    auto hw_path = cfg.headwords.find(label);
    if (hw_path == cfg.headwords.end()) throw ConfigError("no headword file for discipline '" + label + "'");
    const auto headwords = read_headwords(hw_path->second);

    std::vector<TermFrequency> sample;
    if (!cfg.sample_file.empty()) {
      sample = read_term_frequencies(cfg.sample_file);
    } else {
      if (!model) model = load_model(cfg);
      sample = systematic_sample(*model, label, cfg.sample_size ? cfg.sample_size : kDefaultSampleSize);
    }
    auto coded = code_sample(sample, headwords);
    // Terms not judged to be candidates are never looked up.
    if (candidates) {
      for (auto& ct : coded)
        if (!candidates->count(ct.term)) ct.code = CoverageCode::NotInDict;
    }
    const auto report = coverage_report(coded);

    std::string tsv = "term\tfrequency\tcode\n";
    for (const auto& ct : coded) tsv += fmt::format("{}\t{}\t{}\n", ct.term, ct.frequency, static_cast<int>(ct.code));
    tsv += "# code\tterms\tpercent\tmean_frequency\tpercent_change\n";
    for (std::size_t c = 0; c < kCoverageCodeCount; ++c) {
      tsv += fmt::format("# {}\t{}\t{}\t{}\t{}\n", c, report.counts[c], num(report.percent[c], 6),
                         report.mean_frequency[c] ? num(*report.mean_frequency[c], 6) : "undefined",
                         report.percent_change[c] ? fmt::format("{:+d}%", *report.percent_change[c]) : "undefined");
    }
    out.write("code_" + file_label(label) + ".tsv", tsv);
    out.write_json("code_" + file_label(label) + "_summary.json", coverage_json(label, report));
    fmt::print("{}: {} terms coded\n", label, report.total);
  }
  return 0;
}

int cmd_measure(const RunConfig& cfg, const Output& out) {
  ordered_json summary;
  summary["command"] = "measure";
  bool did_something = false;

  if (!cfg.annotations.empty()) {
    did_something = true;
    const auto table = read_annotations(cfg.annotations);
    std::vector<Group> groups = cfg.groups;
    if (groups.empty()) {
      for (const auto& [label, slices] : table) groups.push_back({label, {label}});
    }
    const auto kind = cfg.sample_variance ? VarianceKind::Sample : VarianceKind::Population;
    const auto profiles = usage_profile(table, groups, kind);
    summary["variance"] = cfg.sample_variance ? "sample" : "population";
    summary["groups"] = ordered_json::array();
    for (const auto& p : profiles) {
      ordered_json g{{"name", p.name}, {"members", p.members}};
      for (const auto* part : {&p.top, &p.bottom}) {
        ordered_json cats = ordered_json::object();
        for (std::size_t c = 0; c < kUsageCategoryCount; ++c)
          cats[std::string(to_string(static_cast<UsageCategory>(c)))] = {{"mean", (*part)[c].mean},
                                                                          {"variance", (*part)[c].variance}};
        g[part == &p.top ? "top" : "bottom"] = cats;
      }
      // M_u of the group's mean profile.
      UsageCounts top{}, bottom{};
      for (std::size_t c = 0; c < kUsageCategoryCount; ++c) {
        top[static_cast<UsageCategory>(c)] = p.top[c].mean;
        bottom[static_cast<UsageCategory>(c)] = p.bottom[c].mean;
      }
      g["mu_top"] = m_u(top);
      g["mu_bottom"] = m_u(bottom);
      summary["groups"].push_back(g);
    }
    std::string tsv = "group\tslice\tcategory\tmean_percent\tvariance\n";
    for (const auto& p : profiles) {
      for (const auto slice : {Slice::Top, Slice::Bottom}) {
        const auto& stats = slice == Slice::Top ? p.top : p.bottom;
        for (std::size_t c = 0; c < kUsageCategoryCount; ++c)
          tsv += fmt::format("{}\t{}\t{}\t{}\t{}\n", p.name, to_string(slice), to_string(static_cast<UsageCategory>(c)),
                             num(stats[c].mean, 6), num(stats[c].variance, 6));
      }
    }
    out.write("measure_table4.tsv", tsv);

    ordered_json rows = ordered_json::array();
    for (const auto& r : measure_reports(table)) {
      rows.push_back({{"label", r.discipline},
                      {"source", "annotations"},
                      {"mu_top", r.mu_top},
                      {"mu_bottom", r.mu_bottom},
                      {"m_delta", r.m_delta ? ordered_json(*r.m_delta) : ordered_json(nullptr)}});
    }
    summary["measures"] = rows;
  }

  if (!cfg.mu_table.empty()) {
    did_something = true;
    ordered_json rows = summary.contains("measures") ? summary["measures"] : ordered_json::array();
    for (const auto& r : read_mu_table(cfg.mu_table)) {
      ordered_json row{
          {"label", r.discipline}, {"source", "mu_table"}, {"mu_top", r.mu_top}, {"mu_bottom", r.mu_bottom}};
      row["m_delta"] = (r.mu_top > 0 && r.mu_bottom > 0) ? ordered_json(m_delta(r.mu_top, r.mu_bottom))
                                                         : ordered_json(nullptr);
      if (r.published_m_delta) row["published_m_delta"] = *r.published_m_delta;
      rows.push_back(row);
    }
    summary["measures"] = rows;
  }

  if (summary.contains("measures")) {
    std::string tsv = "discipline\tsource\tmu_top\tmu_bottom\tm_delta\tpublished_m_delta\n";
    for (const auto& r : summary["measures"]) {
      tsv += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\n", r["label"].get<std::string>(), r["source"].get<std::string>(),
                         num(r["mu_top"].get<double>(), 6), num(r["mu_bottom"].get<double>(), 6),
                         r["m_delta"].is_null() ? "undefined" : fmt::format("{:.3f}", r["m_delta"].get<double>()),
                         r.contains("published_m_delta") ? num(r["published_m_delta"].get<double>(), 6) : "");
    }
    out.write("measure_table5.tsv", tsv);
  }

  if (!cfg.sl_terms.empty()) {
    did_something = true;
    std::map<std::string, TermSet> sets;
    for (const auto& [label, path] : cfg.sl_terms) sets[label] = read_term_set(path);
    std::string tsv = "x\ty\tdistinctiveness\n";
    ordered_json d = ordered_json::object();
    if (!cfg.general_headwords.empty()) {
      const auto general = read_term_set(cfg.general_headwords);
      ordered_json g = ordered_json::object();
      for (const auto& [label, set] : sets) {
        const double v = distinctiveness_general(set, general);
        g[label] = v;
        tsv += fmt::format("{}\tGENERAL\t{}\n", label, num(v, 6));
      }
      d["general"] = g;
    }
    ordered_json pair = ordered_json::object();
    for (const auto& [x, sx] : sets) {
      for (const auto& [y, sy] : sets) {
        if (x == y) continue;
        const double v = distinctiveness_pairwise(sx, sy);
        pair[x][y] = v;
        tsv += fmt::format("{}\t{}\t{}\n", x, y, num(v, 6));
      }
    }
    d["pairwise"] = pair;
    summary["distinctiveness"] = d;
    out.write("measure_distinctiveness.tsv", tsv);
  }

  if (!did_something) throw ConfigError("measure needs --annotations, --mu-table or --sl-terms");
  out.write_json("measure_summary.json", summary);
  fmt::print("{}", render_measures(summary));
  return 0;
}

int cmd_classify(const RunConfig& cfg, const Output& out) {
  if (cfg.corpus.empty()) throw ConfigError("classify needs --corpus");
  const auto docs = read_corpus(cfg.corpus);
  const auto model = cfg.model.empty() ? build_from_corpus(cfg, docs) : load_model(cfg);

  ClassifyOptions opt;
  opt.mode = model.mode();
  std::string fallback = cfg.fallback.empty() ? "unclassified" : cfg.fallback;
  if (fallback == "random") {
    if (!cfg.seed) throw ConfigError("--fallback random needs a seed (random:<seed> or --seed)");
    fallback = "random:" + std::to_string(*cfg.seed);
  }
  opt.fallback = parse_fallback(fallback);
  opt.weighting = cfg.token_multiplicity ? TermWeighting::TokenMultiplicity : TermWeighting::Distinct;

  const auto result = cfg.serial ? serial::classify_all(model, docs, opt) : classify_all(model, docs, opt);
  const auto& labels = model.disciplines();
  const std::string tag = std::string(to_string(opt.mode));

  std::string scores = "doc_id\tactual\tpredicted\tusable_terms\tfallback";
  for (const auto& l : labels) scores += "\t" + l;
  scores += "\n";
  for (const auto& s : result.scores) {
    scores += fmt::format("{}\t{}\t{}\t{}\t{}", s.doc_id, s.actual, s.predicted, s.usable_terms, s.fallback_used ? 1 : 0);
    for (double w : s.weights) scores += "\t" + num(w, 12);
    scores += "\n";
  }
  out.write("classify_" + tag + "_scores.tsv", scores);

  const auto& m = result.matrix;
  std::string conf = "actual\\predicted";
  for (const auto& l : labels) conf += "\t" + l;
  conf += fmt::format("\t{}\ttotal\taccuracy\n", kUnclassifiedLabel);
  for (std::size_t a = 0; a < m.size(); ++a) {
    conf += labels[a];
    for (std::size_t p = 0; p < m.size(); ++p) conf += fmt::format("\t{}", m.at(a, p));
    conf += fmt::format("\t{}\t{}\t{:.4f}\n", m.unclassified(a), m.row_total(a), m.accuracy(a));
  }
  conf += fmt::format("overall\t{}/{}\t{:.4f}\n", m.trace(), m.total(), m.overall_accuracy());
  out.write("classify_" + tag + "_confusion.tsv", conf);

  ordered_json j;
  j["command"] = "classify";
  j["mode"] = tag;
  j["fallback"] = to_string(opt.fallback);
  j["weighting"] = cfg.token_multiplicity ? "token-multiplicity" : "distinct";
  j["labels"] = labels;
  ordered_json rows = ordered_json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    std::vector<std::int64_t> row;
    for (std::size_t p = 0; p < m.size(); ++p) row.push_back(m.at(a, p));
    rows.push_back({{"label", labels[a]}, {"predicted", row}, {"unclassified", m.unclassified(a)},
                    {"total", m.row_total(a)}, {"accuracy", m.accuracy(a)}});
  }
  j["rows"] = rows;
  std::size_t fallbacks = 0;
  for (const auto& s : result.scores) fallbacks += s.fallback_used;
  j["fallback_documents"] = fallbacks;
  j["overall_accuracy"] = m.overall_accuracy();
  out.write_json("classify_" + tag + "_summary.json", j);
  fmt::print("{}", render_confusion(j));
  return 0;
}

int cmd_report(const Output& out) {
  const auto text = render_report(out.dir());
  out.write("report.txt", text);
  fmt::print("{}", text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublanguage corpus statistics and Poisson-percentile classification"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  std::string out_flag;
  std::vector<std::string> headword_specs, sl_term_specs, group_specs;
  std::uint64_t seed_flag = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Declarative JSON config file");
    sub->add_option("--out", out_flag, "Output directory (env SUBLANG_OUT_DIR)");
  };
  auto add_model_inputs = [&](CLI::App* sub) {
    sub->add_option("--corpus", cfg.corpus, "Corpus file (JSON lines)");
    sub->add_option("--stopwords", cfg.stopwords, "Stopword file");
    sub->add_option("--model", cfg.model, "Model file written by ingest");
    sub->add_option("--mode", cfg.mode, "title|abstract|both")->check(CLI::IsMember({"title", "abstract", "both"}));
    sub->add_option("--disciplines", cfg.disciplines, "Registered discipline labels, in order")->delimiter(',');
  };

  SyntheticConfig synth;
  std::string synth_name = "corpus.jsonl";
  auto* s_synth = app.add_subcommand("synth", "Generate the seeded synthetic corpus");
  add_common(s_synth);
  s_synth->add_option("--seed", synth.seed, "Generator seed")->capture_default_str();
  s_synth->add_option("--docs-per-discipline", synth.docs_per_discipline)->capture_default_str();
  s_synth->add_option("--signature-rate", synth.signature_rate)->capture_default_str();
  s_synth->add_option("--disciplines", synth.disciplines)->delimiter(',');
  s_synth->add_option("--name", synth_name, "Output file name")->capture_default_str();

  auto* s_ingest = app.add_subcommand("ingest", "Build frequency tables and per-discipline counts");
  add_common(s_ingest);
  add_model_inputs(s_ingest);

  auto* s_rank = app.add_subcommand("rank", "Rank terms by Poisson percentile");
  add_common(s_rank);
  add_model_inputs(s_rank);
  s_rank->add_option("--discipline", cfg.discipline, "Discipline (default: all)");
  s_rank->add_option("--top", cfg.top, "Top/bottom slice size (default 5)");

  auto* s_sample = app.add_subcommand("sample", "Systematic frequency-sorted sample");
  add_common(s_sample);
  add_model_inputs(s_sample);
  s_sample->add_option("--discipline", cfg.discipline, "Discipline (default: all)");
  s_sample->add_option("--size", cfg.sample_size, "Sample size (default 500)");

  auto* s_code = app.add_subcommand("code", "Code sampled terms against a specialized dictionary");
  add_common(s_code);
  add_model_inputs(s_code);
  s_code->add_option("--discipline", cfg.discipline);
  s_code->add_option("--headwords", headword_specs, "discipline=headword-file (repeatable)");
  s_code->add_option("--sample-file", cfg.sample_file, "term<TAB>frequency file from `sample`");
  s_code->add_option("--size", cfg.sample_size, "Sample size when sampling from the corpus");
  s_code->add_option("--candidates", cfg.candidates, "Only these terms are looked up");

  auto* s_measure = app.add_subcommand("measure", "Usage profiles, M_u, M_delta and distinctiveness");
  add_common(s_measure);
  s_measure->add_option("--annotations", cfg.annotations, "Annotation rows");
  s_measure->add_option("--group", group_specs, "name=disc,disc,... (repeatable)");
  s_measure->add_flag("--sample-variance", cfg.sample_variance, "Use n-1 in the variance");
  s_measure->add_option("--mu-table", cfg.mu_table, "Precomputed M_u rows");
  s_measure->add_option("--sl-terms", sl_term_specs, "discipline=term-file (repeatable)");
  s_measure->add_option("--general", cfg.general_headwords, "General-dictionary headword file");

  auto* s_classify = app.add_subcommand("classify", "Leave-one-out Poisson-percentile classification");
  add_common(s_classify);
  add_model_inputs(s_classify);
  s_classify->add_option("--fallback", cfg.fallback, "random:<seed>|random|unclassified");
  s_classify->add_option("--seed", seed_flag, "Seed for --fallback random");
  s_classify->add_flag("--token-multiplicity", cfg.token_multiplicity, "Weight terms by in-document count");
  s_classify->add_flag("--serial", cfg.serial, "Use the single-threaded reference path");

  auto* s_report = app.add_subcommand("report", "Render summary tables from earlier artifacts");
  add_common(s_report);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& spec : headword_specs) cfg.headwords.insert(parse_keyed_path(spec));
    for (const auto& spec : sl_term_specs) cfg.sl_terms.insert(parse_keyed_path(spec));
    for (const auto& spec : group_specs) cfg.groups.push_back(parse_group(spec));
    if (s_classify->count("--seed")) cfg.seed = seed_flag;
    if (!config_path.empty()) merge_config_file(cfg, config_path);
    const Output out(resolve_out_dir(out_flag, cfg.out));

    if (*s_synth) return cmd_synth(synth, out, synth_name);
    if (*s_ingest) return cmd_ingest(cfg, out);
    if (*s_rank) return cmd_rank(cfg, out);
    if (*s_sample) return cmd_sample(cfg, out);
    if (*s_code) return cmd_code(cfg, out);
    if (*s_measure) return cmd_measure(cfg, out);
    if (*s_classify) return cmd_classify(cfg, out);
    if (*s_report) return cmd_report(out);
  } catch (const sublang::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
