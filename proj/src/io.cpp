#include "sublang/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "sublang/error.hpp"
#include "sublang/tokenize.hpp"

namespace sublang {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  return in;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, const std::string& name, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(name, line, std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::vector<std::string_view> split_fields(std::string_view line, bool whitespace) {
  std::vector<std::string_view> out;
  if (whitespace) {
    std::size_t i = 0;
    while (i < line.size()) {
      const auto start = line.find_first_not_of(" \t", i);
      if (start == std::string_view::npos) break;
      const auto end = std::min(line.find_first_of(" \t", start), line.size());
      out.push_back(line.substr(start, end - start));
      i = end;
    }
    return out;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t' || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

void for_each_data_line(std::istream& in, const std::function<void(std::size_t, std::string_view)>& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    fn(number, t);
  }
}

// --- corpus -----------------------------------------------------------------

Document to_document(const RawRecord& record) {
  return make_document(record.id, record.discipline, record.title, record.abstract);
}

std::vector<RawRecord> parse_corpus_records(std::istream& in, const std::string& name) {
  std::vector<RawRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(name, number, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(name, number, "record is not a JSON object");
    auto field = [&](const char* key) {
      auto it = j.find(key);
      if (it == j.end()) throw ParseError(name, number, std::string("missing field '") + key + "'");
      if (!it->is_string()) throw ParseError(name, number, std::string("field '") + key + "' is not a string");
      return it->get<std::string>();
    };
    out.push_back({field("id"), field("discipline"), field("title"), field("abstract")});
  }
  return out;
}

std::vector<RawRecord> read_corpus_records(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_corpus_records(in, path.string());
}

std::vector<Document> read_corpus(const std::filesystem::path& path) {
  std::vector<Document> docs;
  for (const auto& r : read_corpus_records(path)) docs.push_back(to_document(r));
  return docs;
}

void write_corpus_records(std::ostream& out, std::span<const RawRecord> records) {
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["discipline"] = r.discipline;
    j["title"] = r.title;
    j["abstract"] = r.abstract;
    out << j.dump() << '\n';
  }
}

// --- word lists ---------------------------------------------------------------

StopwordList parse_stopwords(std::istream& in, const std::string& name) {
  std::vector<std::string> terms;
  for_each_data_line(in, [&](std::size_t number, std::string_view line) {
    std::string token = normalize_headword(line);
    if (!is_normalized_token(token))
      throw ParseError(name, number, "stopword '" + std::string(line) + "' is not a single token");
    terms.push_back(std::move(token));
  });
  return StopwordList(terms);
}

StopwordList read_stopwords(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_stopwords(in, path.string());
}

HeadwordList parse_headwords(std::istream& in, const std::string& name) {
  std::vector<std::string> entries;
  for_each_data_line(in, [&](std::size_t, std::string_view line) { entries.emplace_back(line); });
  try {
    return HeadwordList(entries);
  } catch (const ConfigError& e) {
    throw ParseError(name, 0, e.what());
  }
}

HeadwordList read_headwords(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_headwords(in, path.string());
}

TermSet read_term_set(const std::filesystem::path& path) {
  auto in = open_input(path);
  TermSet out;
  for_each_data_line(in, [&](std::size_t, std::string_view line) { out.insert(normalize_headword(line)); });
  return out;
}

// --- annotations --------------------------------------------------------------

AnnotationTable parse_annotations(std::istream& in, const std::string& name) {
  AnnotationTable table;
  bool first = true;
  for_each_data_line(in, [&](std::size_t number, std::string_view line) {
    const auto f = split_fields(line);
    if (first && !f.empty() && f[0] == "discipline") {
      first = false;
      return;
    }
    first = false;
    if (f.size() != 5) throw ParseError(name, number, "expected 5 fields, got " + std::to_string(f.size()));
    if (f[0].empty()) throw ParseError(name, number, "empty discipline");
    Slice slice{};
    UsageCategory category{};
    try {
      slice = parse_slice(f[1]);
      category = parse_usage_category(f[3]);
    } catch (const ConfigError& e) {
      throw ParseError(name, number, e.what());
    }
    const double count = parse_number<double>(f[4], name, number, "count");
    if (count < 0) throw ParseError(name, number, "negative count");
    auto& sc = table[std::string(f[0])];
    auto& slot = slice == Slice::Top ? sc.top : sc.bottom;
    if (!slot) slot = UsageCounts{};
    (*slot)[category] += count;
  });
  return table;
}

AnnotationTable read_annotations(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_annotations(in, path.string());
}

std::vector<MuRow> parse_mu_table(std::istream& in, const std::string& name) {
  std::vector<MuRow> rows;
  for_each_data_line(in, [&](std::size_t number, std::string_view line) {
    const auto f = split_fields(line, true);
    if (f.size() != 3 && f.size() != 4)
      throw ParseError(name, number, "expected 3 or 4 fields, got " + std::to_string(f.size()));
    MuRow r{std::string(f[0]), parse_number<double>(f[1], name, number, "M_u top"),
            parse_number<double>(f[2], name, number, "M_u bottom"), std::nullopt};
    if (f.size() == 4) r.published_m_delta = parse_number<double>(f[3], name, number, "M_delta");
    rows.push_back(std::move(r));
  });
  return rows;
}

std::vector<MuRow> read_mu_table(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_mu_table(in, path.string());
}

std::vector<TermFrequency> read_term_frequencies(const std::filesystem::path& path) {
  auto in = open_input(path);
  const std::string name = path.string();
  std::vector<TermFrequency> out;
  for_each_data_line(in, [&](std::size_t number, std::string_view line) {
    const auto f = split_fields(line, true);
    if (f.size() < 2) throw ParseError(name, number, "expected term and frequency");
    out.push_back({std::string(f[0]), parse_number<std::int64_t>(f[1], name, number, "frequency")});
  });
  return out;
}

// --- model ----------------------------------------------------------------------

void write_model(std::ostream& out, const FrequencyModel& model) {
  out << "sublang-model\t1\n";
  out << "mode\t" << to_string(model.mode()) << '\n';
  for (std::size_t d = 0; d < model.discipline_count(); ++d) {
    out << "discipline\t" << model.disciplines()[d] << '\t' << model.document_count(d) << '\t'
        << model.token_count(d) << '\n';
  }
  for (const auto& s : model.stopwords().terms()) out << "stopword\t" << s << '\n';
  std::vector<const std::pair<const std::string, TermCounts>*> rows;
  for (const auto& kv : model.terms()) rows.push_back(&kv);
  std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->first < b->first; });
  for (const auto* kv : rows) {
    out << "term\t" << kv->first << '\t' << kv->second.global;
    for (auto c : kv->second.per_db) out << '\t' << c;
    out << '\n';
  }
}

FrequencyModel parse_model(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t number = 0;
  std::optional<FieldMode> mode;
  std::vector<std::string> disciplines;
  std::vector<std::size_t> doc_counts;
  std::vector<std::int64_t> token_counts;
  std::vector<std::string> stopwords;
  FrequencyModel::TermTable terms;
  bool header = false;

  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    for (;;) {
      const auto tab = rest.find('\t');
      f.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    const auto kind = f[0];
    if (!header) {
      if (kind != "sublang-model" || f.size() != 2 || f[1] != "1")
        throw ParseError(name, number, "not a sublang model file (version 1)");
      header = true;
    } else if (kind == "mode" && f.size() == 2) {
      try {
        mode = parse_field_mode(f[1]);
      } catch (const ConfigError& e) {
        throw ParseError(name, number, e.what());
      }
    } else if (kind == "discipline" && f.size() == 4) {
      if (!terms.empty()) throw ParseError(name, number, "discipline rows must precede term rows");
      disciplines.emplace_back(f[1]);
      doc_counts.push_back(parse_number<std::size_t>(f[2], name, number, "document count"));
      token_counts.push_back(parse_number<std::int64_t>(f[3], name, number, "token count"));
    } else if (kind == "stopword" && f.size() == 2) {
      stopwords.emplace_back(f[1]);
    } else if (kind == "term" && f.size() == disciplines.size() + 3) {
      TermCounts c;
      c.global = parse_number<std::int64_t>(f[2], name, number, "global count");
      for (std::size_t d = 0; d < disciplines.size(); ++d)
        c.per_db.push_back(parse_number<std::int64_t>(f[3 + d], name, number, "count"));
      if (!terms.emplace(std::string(f[1]), std::move(c)).second)
        throw ParseError(name, number, "duplicate term '" + std::string(f[1]) + "'");
    } else {
      throw ParseError(name, number, "unrecognized row '" + std::string(kind) + "' or wrong field count");
    }
  }
  if (!header) throw ParseError(name, number, "empty model file");
  if (!mode) throw ParseError(name, number, "missing mode row");
  try {
    return FrequencyModel::from_tables(std::move(disciplines), *mode, StopwordList(stopwords), std::move(terms),
                                       std::move(doc_counts), std::move(token_counts));
  } catch (const ConfigError& e) {
    throw ParseError(name, number, std::string("inconsistent model: ") + e.what());
  }
}

FrequencyModel read_model(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_model(in, path.string());
}

}  // namespace sublang
