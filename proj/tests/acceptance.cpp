// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Tolerances are fixed here and must not be relaxed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sublang/classify.hpp"
#include "sublang/dictcov.hpp"
#include "sublang/io.hpp"
#include "sublang/measures.hpp"
#include "sublang/poisson.hpp"
#include "sublang/synthetic.hpp"
#include "sublang/tokenize.hpp"

using namespace sublang;

namespace {

constexpr double kTableTolerance = 0.001;
constexpr double kPoissonRelTolerance = 1e-12;
constexpr double kLeaveOneOutTolerance = 1e-9;
constexpr double kMinBothAccuracy = 0.90;
constexpr double kTitleSlack = 0.05;
constexpr int kPropertyCases = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_double(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome table5() {
  struct Row {
    const char* db;
    double top, bottom, published;
  };
  const Row rows[] = {{"elec", .953, .289, 1.193}, {"phys", .671, .246, 1.000}, {"math", .561, .368, .420},
                      {"bio", .866, .571, .416},   {"psych", .639, .477, .292}, {"soc", .073, .080, -.091},
                      {"hist", .051, .156, -1.118}, {"econ", .172, .640, -1.314}};
  Outcome o;
  int ok = 0;
  for (const auto& r : rows) {
    const double got = m_delta(r.top, r.bottom);
    const double diff = std::abs(got - r.published);
    const bool pass = diff <= kTableTolerance;
    ok += pass;
    o.pass = o.pass && pass;
    if (!pass)
      o.notes.push_back(std::string(r.db) + ": computed " + fmt_double("%.5f", got) + ", published " +
                        fmt_double("%.3f", r.published) + ", |diff| " + fmt_double("%.5f", diff));
  }
  o.detail = std::to_string(ok) + "/8 rows within " + fmt_double("%.3f", kTableTolerance);
  return o;
}

Outcome mu_consistency() {
  const UsageCounts science{61.7, 20.2, 12.1, 6.0};
  const UsageCounts humanities{9.9, 77.7, 0.0, 12.3};
  const double s = m_u(science), h = m_u(humanities);
  Outcome o;
  o.pass = std::abs(s - 0.738) <= kTableTolerance && std::abs(h - 0.099) <= kTableTolerance;
  o.detail = "scientific " + fmt_double("%.4f", s) + " (0.738), humanities " + fmt_double("%.4f", h) + " (0.099)";
  return o;
}

Outcome distinctiveness() {
  TermSet sl, general;
  for (int i = 0; i < 1000; ++i) sl.insert("t" + std::to_string(i));
  for (int i = 0; i < 404; ++i) general.insert("t" + std::to_string(i));
  for (int i = 0; i < 300; ++i) general.insert("g" + std::to_string(i));
  const double partial = distinctiveness_general(sl, general);
  const double full = distinctiveness_general(sl, sl);
  Outcome o;
  o.pass = partial == 1.0 - 404.0 / 1000.0 && std::abs(partial - 0.596) < 1e-12 && full == 0.0;
  o.detail = "40.4% overlap " + fmt_double("%.6f", partial) + " (0.596), full overlap " + fmt_double("%g", full);
  return o;
}

Outcome percent_changes() {
  const std::array<std::optional<double>, kCoverageCodeCount> means{4.11, 7.21, 7.57, 4.24};
  const auto row = percent_change_row(means);
  Outcome o;
  o.pass = row[0] == 0L && row[1] == 75L && row[2] == 84L && row[3] == 3L;
  o.detail = "row";
  for (const auto& v : row) o.detail += " " + (v ? fmt_double("%+.0f%%", static_cast<double>(*v)) : std::string("?"));
  o.detail += " (expected 0% +75% +84% +3%)";
  return o;
}

Outcome poisson_oracle() {
  const auto start = Clock::now();
  const double lambdas[] = {0.1, 0.5, 1, 2, 5, 10, 25, 50};
  Outcome o;
  double worst = 0.0;
  std::size_t points = 0;
  for (const double l : lambdas) {
    double prev = -1.0;
    for (std::int64_t t = 0; t <= 200; ++t) {
      const double got = poisson::percentile(t, l);
      const double want = oracle::poisson_cdf(t, l).convert_to<double>();
      const double rel = std::abs(got - want) / want;
      worst = std::max(worst, rel);
      ++points;
      if (rel > kPoissonRelTolerance) {
        o.pass = false;
        if (o.notes.size() < 10)
          o.notes.push_back("t=" + std::to_string(t) + " lambda=" + fmt_double("%g", l) + " rel " + fmt_double("%.3g", rel));
      }
      if (got < prev || got < 0.0 || got > 1.0) {
        o.pass = false;
        o.notes.push_back("non-monotone in t at t=" + std::to_string(t) + " lambda=" + fmt_double("%g", l));
      }
      prev = got;
    }
  }
  for (std::int64_t t = 0; t <= 200; ++t) {
    for (std::size_t i = 0; i + 1 < std::size(lambdas); ++i) {
      if (poisson::percentile(t, lambdas[i + 1]) > poisson::percentile(t, lambdas[i])) {
        o.pass = false;
        o.notes.push_back("increasing in lambda at t=" + std::to_string(t));
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 5.0) o.pass = false;
  o.detail = std::to_string(points) + " points, worst relative error " + fmt_double("%.2e", worst) + ", " +
             fmt_double("%.2f", secs) + " s";
  return o;
}

std::vector<Document> synthetic_documents(const SyntheticConfig& cfg) {
  std::vector<Document> docs;
  for (const auto& r : generate_corpus(cfg)) docs.push_back(to_document(r));
  return docs;
}

Outcome leave_one_out() {
  const auto start = Clock::now();
  const SyntheticConfig cfg;
  const auto docs = synthetic_documents(cfg);
  const StopwordList stop;
  const auto model = build_model(docs, stop, FieldMode::Both, cfg.disciplines);
  const ClassifyOptions opts{FieldMode::Both, FallbackPolicy::unclassified(), TermWeighting::Distinct};
  Outcome o;
  double worst = 0.0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto s = score_document(docs[i], model, opts);
    const auto expected = oracle::rebuilt_weights(docs, i, stop, FieldMode::Both, cfg.disciplines);
    for (std::size_t d = 0; d < expected.size(); ++d) worst = std::max(worst, std::abs(s.weights[d] - expected[d]));
  }
  const double secs = seconds_since(start);
  o.pass = worst <= kLeaveOneOutTolerance && secs < 60.0;
  o.detail = std::to_string(docs.size()) + " documents, worst |diff| " + fmt_double("%.2e", worst) + ", " +
             fmt_double("%.2f", secs) + " s";
  return o;
}

Outcome classification() {
  const auto start = Clock::now();
  const SyntheticConfig cfg;
  const auto docs = synthetic_documents(cfg);
  auto run = [&](FieldMode mode) {
    const auto model = build_model(docs, StopwordList{}, mode, cfg.disciplines);
    return classify_all(model, docs, ClassifyOptions{mode, FallbackPolicy::unclassified(), TermWeighting::Distinct});
  };
  const auto both = run(FieldMode::Both);
  const auto title = run(FieldMode::TitleOnly);
  Outcome o;
  for (std::size_t r = 0; r < both.matrix.size(); ++r) {
    if (both.matrix.row_total(r) != static_cast<std::int64_t>(cfg.docs_per_discipline)) {
      o.pass = false;
      o.notes.push_back("row " + both.matrix.labels()[r] + " sums to " + std::to_string(both.matrix.row_total(r)));
    }
  }
  const double ab = both.matrix.overall_accuracy(), at = title.matrix.overall_accuracy();
  const double secs = seconds_since(start);
  o.pass = o.pass && ab >= kMinBothAccuracy && ab >= at - kTitleSlack && secs < 30.0;
  o.detail = "both " + fmt_double("%.4f", ab) + ", title " + fmt_double("%.4f", at) + ", " + fmt_double("%.2f", secs) + " s";
  return o;
}

// Property suites.

CoverageCode brute_force_code(const std::string& term, const std::vector<std::string>& entries) {
  for (const auto& e : entries)
    if (e == term) return CoverageCode::ExactMatch;
  for (const auto& e : entries)
    if (e.rfind(term + " ", 0) == 0) return CoverageCode::PhraseStart;
  for (const auto& e : entries)
    if (e.find(' ') == std::string::npos && variant_match(term, e)) return CoverageCode::Variant;
  return CoverageCode::NotInDict;
}

std::string random_word(std::mt19937& rng) {
  static const std::vector<std::string> stems{"cell", "stud", "run", "rat", "box", "hop", "map", "tax", "wave"};
  static const std::vector<std::string> suffixes{"", "s", "es", "y", "ies", "ed", "ing", "e", "ped", "ning"};
  return stems[rng() % stems.size()] + suffixes[rng() % suffixes.size()];
}

int coverage_property(std::mt19937& rng) {
  int failures = 0;
  for (int trial = 0; trial < kPropertyCases; ++trial) {
    std::vector<std::string> entries;
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      auto w = random_word(rng);
      if (rng() % 3 == 0) w += " " + random_word(rng);
      entries.push_back(w);
    }
    const HeadwordList hw(entries);
    const auto term = random_word(rng);
    const auto code = code_term(term, hw);
    const int v = static_cast<int>(code);
    if (v < 0 || v > 3 || code != brute_force_code(term, entries)) ++failures;
  }
  return failures;
}

int m_delta_property(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  int failures = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const double a = u(rng), b = u(rng);
    if (m_delta(a, b) != -m_delta(b, a)) ++failures;
  }
  return failures;
}

int distinctiveness_property(std::mt19937& rng) {
  int failures = 0;
  const TermSet x{"a", "b", "c", "d"}, y{"c", "d", "e"};
  if (distinctiveness_pairwise(x, y) != 0.5) ++failures;
  if (std::abs(distinctiveness_pairwise(y, x) - 1.0 / 3.0) > 1e-15) ++failures;
  for (int i = 0; i < kPropertyCases; ++i) {
    TermSet a, b;
    const int na = 1 + static_cast<int>(rng() % 12), nb = static_cast<int>(rng() % 12);
    for (int k = 0; k < na; ++k) a.insert("t" + std::to_string(rng() % 20));
    for (int k = 0; k < nb; ++k) b.insert("t" + std::to_string(rng() % 20));
    const double d = distinctiveness_pairwise(a, b);
    const double g = distinctiveness_general(a, b);
    if (d < 0.0 || d > 1.0 || d != g || distinctiveness_pairwise(a, a) != 0.0) ++failures;
  }
  return failures;
}

int tokenizer_property(std::mt19937& rng) {
  const std::string alphabet = "aZ9-' .,\t!?xY\xc3\xa9\n;:()";
  int failures = 0;
  for (int trial = 0; trial < kPropertyCases; ++trial) {
    std::string text;
    const int len = static_cast<int>(rng() % 60);
    for (int i = 0; i < len; ++i) text.push_back(alphabet[rng() % alphabet.size()]);
    const auto a = tokenize(text);
    bool ok = a == tokenize(text);
    std::string joined;
    for (const auto& t : a) {
      ok = ok && is_normalized_token(t);
      joined += t + " ";
    }
    ok = ok && tokenize(joined) == a;
    if (!ok) ++failures;
  }
  return failures;
}

Outcome properties() {
  std::mt19937 rng(20240517);
  const std::pair<const char*, std::function<int(std::mt19937&)>> suites[] = {
      {"coverage", coverage_property},
      {"m_delta", m_delta_property},
      {"distinctiveness", distinctiveness_property},
      {"tokenizer", tokenizer_property}};
  Outcome o;
  o.detail = std::to_string(kPropertyCases) + " cases each:";
  for (const auto& [name, fn] : suites) {
    const int failures = fn(rng);
    o.pass = o.pass && failures == 0;
    o.detail += std::string(" ") + name + (failures == 0 ? " ok" : " " + std::to_string(failures) + " failed");
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 published M_delta column", table5},
      {"2 M_u group consistency", mu_consistency},
      {"3 distinctiveness values", distinctiveness},
      {"4 percent-change footer", percent_changes},
      {"5 Poisson kernel vs arbitrary precision", poisson_oracle},
      {"6 leave-one-out equivalence", leave_one_out},
      {"7 synthetic classification accuracy", classification},
      {"8 property suites", properties}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    for (const auto& n : o.notes) std::printf("        %s\n", n.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
