#include "doctest.h"

#include <random>

#include "sublang/dictcov.hpp"
#include "sublang/error.hpp"

using namespace sublang;

TEST_CASE("code_term categories") {
  const HeadwordList hw({"array", "atomic absorption", "atomic beam", "alloy", "Solar  Cell"});
  CHECK(code_term("array", hw) == CoverageCode::ExactMatch);
  CHECK(code_term("atomic", hw) == CoverageCode::PhraseStart);
  CHECK(code_term("alloys", hw) == CoverageCode::Variant);
  CHECK(code_term("zebra", hw) == CoverageCode::NotInDict);
  CHECK(code_term("solar", hw) == CoverageCode::PhraseStart);
  CHECK(hw.entries().count("solar cell") == 1);
  CHECK(code_term("absorption", hw) == CoverageCode::NotInDict);
}

TEST_CASE("code priority: exact beats phrase start beats variant") {
  const HeadwordList hw({"cell", "cell wall", "cells"});
  CHECK(code_term("cell", hw) == CoverageCode::ExactMatch);
  const HeadwordList hw2({"cell wall", "cells"});
  CHECK(code_term("cell", hw2) == CoverageCode::PhraseStart);
}

TEST_CASE("variant_match rules") {
  CHECK(variant_match("cells", "cell"));
  CHECK(variant_match("boxes", "box"));
  CHECK(variant_match("studies", "study"));
  CHECK(variant_match("running", "run"));
  CHECK(variant_match("rated", "rate"));
  CHECK(variant_match("rating", "rate"));
  CHECK(variant_match("walked", "walk"));
  CHECK(variant_match("walk", "walking"));
  CHECK(variant_match("cell", "cell"));
  CHECK_FALSE(variant_match("ration", "rat"));
  CHECK_FALSE(variant_match("cat", "dog"));
  CHECK_FALSE(variant_match("seeing", "see s"));
  CHECK_FALSE(variant_match("red", "r"));  // stem shorter than two characters
  CHECK_FALSE(variant_match("sleeted", "slee"));
}

TEST_CASE("variant_candidates is exactly the variant relation") {
  // Every candidate is a variant, and every variant of a word among a pool of
  // related forms is a candidate.
  const std::vector<std::string> pool{"run",    "runs",    "running", "runned", "rune",   "runes",
                                      "study",  "studies", "studied", "box",    "boxes",  "rate",
                                      "rated",  "rating",  "rat",     "ratted", "rats",   "hop",
                                      "hoped",  "hopped",  "hope",    "hoping", "hopping", "ies",
                                      "y",      "sing",    "singing", "sings",  "es",     "s"};
  for (const auto& a : pool) {
    const auto cands = variant_candidates(a);
    for (const auto& c : cands) CHECK(variant_match(a, c));
    for (const auto& b : pool) {
      if (a != b && variant_match(a, b))
        CHECK_MESSAGE(std::find(cands.begin(), cands.end(), b) != cands.end(), a << " -> " << b);
    }
  }
}

namespace {

CoverageCode brute_force_code(const std::string& term, const std::vector<std::string>& entries) {
  for (const auto& e : entries)
    if (e == term) return CoverageCode::ExactMatch;
  for (const auto& e : entries)
    if (e.rfind(term + " ", 0) == 0) return CoverageCode::PhraseStart;
  for (const auto& e : entries)
    if (e.find(' ') == std::string::npos && e != term && variant_match(term, e)) return CoverageCode::Variant;
  return CoverageCode::NotInDict;
}

std::string random_word(std::mt19937& rng) {
  static const std::vector<std::string> stems{"cell", "stud", "run", "rat", "box", "hop", "map", "tax"};
  static const std::vector<std::string> suffixes{"", "s", "es", "y", "ies", "ed", "ing", "e", "ped", "ning"};
  return stems[rng() % stems.size()] + suffixes[rng() % suffixes.size()];
}

}  // namespace

TEST_CASE("coding is total and agrees with a brute-force scan (randomized)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
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
    const int value = static_cast<int>(code);
    CHECK((value >= 0 && value <= 3));
    CHECK(code == brute_force_code(term, entries));
    if (hw.has_single(term)) CHECK(code == CoverageCode::ExactMatch);
  }
}

TEST_CASE("variant_match is symmetric (randomized)") {
  std::mt19937 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_word(rng);
    const auto b = random_word(rng);
    CHECK(variant_match(a, b) == variant_match(b, a));
  }
}

TEST_CASE("percent change rounding") {
  CHECK(percent_change(4.11, 7.21) == 75);
  CHECK(percent_change(4.11, 7.57) == 84);
  CHECK(percent_change(4.11, 4.24) == 3);
  CHECK(percent_change(4.11, 4.11) == 0);
  CHECK(percent_change(2.0, 1.0) == -50);
  CHECK_FALSE(percent_change(0.0, 1.0).has_value());
}

TEST_CASE("coverage_report") {
  const HeadwordList hw({"array", "atomic beam", "alloy"});
  SUBCASE("mixed sample") {
    std::vector<TermFrequency> sample{{"array", 8}, {"atomic", 6}, {"alloys", 2}, {"zebra", 4}, {"yak", 2}};
    const auto r = coverage_report(sample, hw);
    CHECK(r.total == 5);
    CHECK(r.counts == std::array<std::size_t, 4>{2, 1, 1, 1});
    CHECK(r.percent[0] == doctest::Approx(40.0));
    CHECK(r.percent[0] + r.percent[1] + r.percent[2] + r.percent[3] == doctest::Approx(100.0));
    CHECK(*r.mean_frequency[0] == doctest::Approx(3.0));
    CHECK(*r.mean_frequency[1] == doctest::Approx(8.0));
    CHECK(r.percent_change[0] == 0);
    CHECK(r.percent_change[1] == 167);
    CHECK(r.percent_change[3] == -33);
  }
  SUBCASE("all code 0") {
    std::vector<TermFrequency> sample{{"zebra", 4}, {"yak", 2}};
    const auto r = coverage_report(sample, hw);
    CHECK(r.percent[0] == 100.0);
    CHECK(r.percent_change[0] == 0);
    CHECK_FALSE(r.percent_change[1].has_value());
  }
  SUBCASE("no code 0 leaves the change row undefined") {
    std::vector<TermFrequency> sample{{"array", 4}};
    const auto r = coverage_report(sample, hw);
    for (const auto& c : r.percent_change) CHECK_FALSE(c.has_value());
  }
  SUBCASE("empty sample") {
    std::vector<TermFrequency> sample;
    CHECK_THROWS_AS(coverage_report(sample, hw), ConfigError);
  }
}

TEST_CASE("average_means averages defined entries") {
  CoverageReport a, b;
  a.mean_frequency = {2.0, 4.0, std::nullopt, 1.0};
  b.mean_frequency = {4.0, 8.0, 3.0, std::nullopt};
  std::vector<CoverageReport> reports{a, b};
  const auto m = average_means(reports);
  CHECK(*m[0] == 3.0);
  CHECK(*m[1] == 6.0);
  CHECK(*m[2] == 3.0);
  CHECK(*m[3] == 1.0);
}
