#include "sublang/dictcov.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>

#include "sublang/error.hpp"

namespace sublang {

std::string_view to_string(CoverageCode code) {
  switch (code) {
    case CoverageCode::NotInDict:
      return "not-in-dict";
    case CoverageCode::ExactMatch:
      return "exact-match";
    case CoverageCode::PhraseStart:
      return "start-of-phrase";
    case CoverageCode::Variant:
      return "term-variant";
  }
  return "not-in-dict";
}

std::string normalize_headword(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : raw) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
  }
  return out;
}

HeadwordList::HeadwordList(const std::vector<std::string>& entries) {
  for (const auto& raw : entries) {
    auto hw = normalize_headword(raw);
    if (hw.empty()) throw ConfigError("empty headword");
    const auto space = hw.find(' ');
    if (space == std::string::npos) {
      singles_.insert(hw);
    } else {
      phrase_heads_.insert(hw.substr(0, space));
    }
    entries_.insert(std::move(hw));
  }
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMinStem = 2;

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c); }

// `inflected` is a suffixed form of `base`.
bool inflects(std::string_view inflected, std::string_view base) {
  if (inflected.size() == base.size() + 1 && ends_with(inflected, "s") &&
      inflected.substr(0, base.size()) == base)
    return true;
  if (inflected.size() == base.size() + 2 && ends_with(inflected, "es") &&
      inflected.substr(0, base.size()) == base)
    return true;
  if (ends_with(base, "y") && ends_with(inflected, "ies") &&
      inflected.substr(0, inflected.size() - 3) == base.substr(0, base.size() - 1))
    return true;
  for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
    if (!ends_with(inflected, suffix)) continue;
    const auto stem = inflected.substr(0, inflected.size() - suffix.size());
    if (stem.size() < kMinStem) continue;
    if (stem == base) return true;
    const std::size_t n = stem.size();
    if (n >= 2 && stem[n - 1] == stem[n - 2] && is_consonant(stem[n - 1]) && stem.substr(0, n - 1) == base)
      return true;
    if (base.size() == n + 1 && ends_with(base, "e") && base.substr(0, n) == stem) return true;
  }
  return false;
}

}  // namespace

bool variant_match(std::string_view a, std::string_view b) {
  if (a == b) return true;
  return inflects(a, b) || inflects(b, a);
}

std::vector<std::string> variant_candidates(std::string_view a) {
  const std::string s(a);
  std::vector<std::string> raw;
  // a as the base form
  raw.push_back(s + "s");
  raw.push_back(s + "es");
  if (ends_with(s, "y")) raw.push_back(s.substr(0, s.size() - 1) + "ies");
  for (const char* suffix : {"ed", "ing"}) {
    raw.push_back(s + suffix);
    if (!s.empty() && is_consonant(s.back())) raw.push_back(s + s.back() + suffix);
    if (ends_with(s, "e")) raw.push_back(s.substr(0, s.size() - 1) + suffix);
  }
  // a as the inflected form
  if (ends_with(s, "s")) raw.push_back(s.substr(0, s.size() - 1));
  if (ends_with(s, "es")) raw.push_back(s.substr(0, s.size() - 2));
  if (ends_with(s, "ies")) raw.push_back(s.substr(0, s.size() - 3) + "y");
  for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
    if (!ends_with(s, suffix)) continue;
    const auto stem = s.substr(0, s.size() - suffix.size());
    raw.push_back(stem);
    if (!stem.empty()) raw.push_back(stem.substr(0, stem.size() - 1));
    raw.push_back(stem + "e");
  }

  std::vector<std::string> out;
  for (auto& c : raw) {
    if (c.empty() || c == s || !variant_match(s, c)) continue;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoverageCode code_term(std::string_view term, const HeadwordList& headwords) {
  if (headwords.has_single(term)) return CoverageCode::ExactMatch;
  if (headwords.starts_phrase(term)) return CoverageCode::PhraseStart;
  for (const auto& candidate : variant_candidates(term)) {
    if (headwords.has_single(candidate)) return CoverageCode::Variant;
  }
  return CoverageCode::NotInDict;
}

std::vector<CodedTerm> code_sample(std::span<const TermFrequency> sample, const HeadwordList& headwords) {
  std::vector<CodedTerm> out;
  out.reserve(sample.size());
  for (const auto& tf : sample) out.push_back({tf.term, tf.frequency, code_term(tf.term, headwords)});
  return out;
}

// ---------------------------------------------------------------------------

std::optional<long> percent_change(double baseline, double mean) {
  if (!(baseline > 0.0)) return std::nullopt;
  return std::lround(100.0 * (mean - baseline) / baseline);
}

std::array<std::optional<long>, kCoverageCodeCount> percent_change_row(
    const std::array<std::optional<double>, kCoverageCodeCount>& means) {
  std::array<std::optional<long>, kCoverageCodeCount> row{};
  if (!means[0]) return row;
  for (std::size_t c = 0; c < kCoverageCodeCount; ++c) {
    if (means[c]) row[c] = percent_change(*means[0], *means[c]);
  }
  return row;
}

CoverageReport coverage_report(std::span<const CodedTerm> coded) {
  if (coded.empty()) throw ConfigError("coverage report needs a non-empty sample");
  CoverageReport r;
  r.total = coded.size();
  std::array<double, kCoverageCodeCount> freq_sum{};
  for (const auto& ct : coded) {
    const auto c = static_cast<std::size_t>(ct.code);
    ++r.counts[c];
    freq_sum[c] += static_cast<double>(ct.frequency);
  }
  for (std::size_t c = 0; c < kCoverageCodeCount; ++c) {
    r.percent[c] = 100.0 * static_cast<double>(r.counts[c]) / static_cast<double>(r.total);
    if (r.counts[c] > 0) r.mean_frequency[c] = freq_sum[c] / static_cast<double>(r.counts[c]);
  }
  r.percent_change = percent_change_row(r.mean_frequency);
  return r;
}

CoverageReport coverage_report(std::span<const TermFrequency> sample, const HeadwordList& headwords) {
  const auto coded = code_sample(sample, headwords);
  return coverage_report(coded);
}

std::array<std::optional<double>, kCoverageCodeCount> average_means(
    std::span<const CoverageReport> reports) {
  std::array<std::optional<double>, kCoverageCodeCount> out{};
  for (std::size_t c = 0; c < kCoverageCodeCount; ++c) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : reports) {
      if (r.mean_frequency[c]) {
        sum += *r.mean_frequency[c];
        ++n;
      }
    }
    if (n > 0) out[c] = sum / static_cast<double>(n);
  }
  return out;
}

}  // namespace sublang
