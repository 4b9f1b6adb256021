#include "doctest.h"

#include <numeric>

#include "sublang/corpus.hpp"
#include "sublang/error.hpp"
#include "sublang/io.hpp"
#include "sublang/synthetic.hpp"

using namespace sublang;

namespace {

// db A holds "x x y" across two documents, db B holds "y z".
std::vector<Document> toy_corpus() {
  return {make_document("a1", "A", "x y", ""), make_document("a2", "A", "x", ""),
          make_document("b1", "B", "y z", "")};
}

std::int64_t total_tokens(const FrequencyModel& m) {
  std::int64_t sum = 0;
  for (std::size_t d = 0; d < m.discipline_count(); ++d) sum += m.token_count(d);
  return sum;
}

void check_conservation(const FrequencyModel& m) {
  for (const auto& [term, c] : m.terms()) {
    CHECK(std::accumulate(c.per_db.begin(), c.per_db.end(), std::int64_t{0}) == c.global);
    CHECK_FALSE(m.stopwords().contains(term));
  }
}

}  // namespace

TEST_CASE("build_model counts tokens per discipline") {
  const auto docs = toy_corpus();
  const auto m = build_model(docs, StopwordList{}, FieldMode::Both);
  REQUIRE(m.disciplines() == std::vector<std::string>{"A", "B"});
  CHECK(m.count(0, "x") == 2);
  CHECK(m.global_count("y") == 2);
  CHECK(m.global_count("z") == 1);
  CHECK(m.count(1, "x") == 0);
  CHECK(m.document_count(0) == 2);
  CHECK(m.token_count(1) == 2);
  check_conservation(m);
}

TEST_CASE("build_model drops stopwords everywhere") {
  const auto docs = toy_corpus();
  const auto m = build_model(docs, StopwordList({"y"}), FieldMode::Both);
  CHECK(m.find("y") == nullptr);
  CHECK(m.global_count("x") == 2);
  check_conservation(m);
}

TEST_CASE("field modes select title or abstract tokens") {
  std::vector<Document> docs{make_document("1", "A", "alpha beta", "gamma gamma delta"),
                             make_document("2", "B", "beta", "epsilon")};
  const auto title = build_model(docs, StopwordList{}, FieldMode::TitleOnly);
  const auto abstract = build_model(docs, StopwordList{}, FieldMode::AbstractOnly);
  const auto both = build_model(docs, StopwordList{}, FieldMode::Both);
  CHECK(total_tokens(title) == 3);
  CHECK(title.find("gamma") == nullptr);
  CHECK(total_tokens(abstract) == 4);
  CHECK(total_tokens(both) == total_tokens(title) + total_tokens(abstract));
}

TEST_CASE("mode consistency and determinism on a generated corpus") {
  SyntheticConfig cfg;
  cfg.docs_per_discipline = 10;
  std::vector<Document> docs;
  for (const auto& r : generate_corpus(cfg)) docs.push_back(to_document(r));
  const StopwordList stop({synthetic_word(0)});
  const auto both = build_model(docs, stop, FieldMode::Both);
  const auto title = build_model(docs, stop, FieldMode::TitleOnly);
  const auto abstract = build_model(docs, stop, FieldMode::AbstractOnly);
  CHECK(total_tokens(both) == total_tokens(title) + total_tokens(abstract));
  check_conservation(both);

  const auto again = build_model(docs, stop, FieldMode::Both);
  CHECK(again.terms().size() == both.terms().size());
  for (const auto& [term, c] : both.terms()) {
    REQUIRE(again.find(term) != nullptr);
    CHECK(again.find(term)->per_db == c.per_db);
  }
}

TEST_CASE("build_model rejects bad corpora") {
  SUBCASE("single discipline") {
    std::vector<Document> docs{make_document("1", "A", "x", "")};
    CHECK_THROWS_AS(build_model(docs, StopwordList{}, FieldMode::Both), ConfigError);
  }
  SUBCASE("empty corpus") {
    std::vector<Document> docs;
    CHECK_THROWS_AS(build_model(docs, StopwordList{}, FieldMode::Both), IngestError);
  }
  SUBCASE("missing label names the document") {
    std::vector<Document> docs{make_document("1", "A", "x", ""), make_document("orphan", "", "x", ""),
                               make_document("3", "B", "x", "")};
    try {
      build_model(docs, StopwordList{}, FieldMode::Both);
      FAIL("expected IngestError");
    } catch (const IngestError& e) {
      CHECK(e.doc_id() == "orphan");
    }
  }
  SUBCASE("unregistered label") {
    std::vector<Document> docs{make_document("1", "A", "x", ""), make_document("2", "C", "x", "")};
    CHECK_THROWS_AS(build_model(docs, StopwordList{}, FieldMode::Both, {"A", "B"}), IngestError);
  }
  SUBCASE("duplicate id") {
    std::vector<Document> docs{make_document("1", "A", "x", ""), make_document("1", "B", "x", "")};
    CHECK_THROWS_AS(build_model(docs, StopwordList{}, FieldMode::Both), IngestError);
  }
  SUBCASE("malformed token") {
    std::vector<Document> docs{{"1", "A", {"Upper"}, {}}, make_document("2", "B", "x", "")};
    CHECK_THROWS_AS(build_model(docs, StopwordList{}, FieldMode::Both), IngestError);
  }
}

TEST_CASE("explicit discipline list keeps empty disciplines") {
  std::vector<Document> docs{make_document("1", "A", "x", ""), make_document("2", "B", "x", "")};
  const auto m = build_model(docs, StopwordList{}, FieldMode::Both, {"A", "B", "C"});
  CHECK(m.discipline_count() == 3);
  CHECK(m.document_count(2) == 0);
}

TEST_CASE("systematic_sample takes every floor(V/k)-th term") {
  // Frequencies 6..1 for t1..t6 in A.
  std::vector<Document> docs;
  std::string text;
  for (int i = 1; i <= 6; ++i) {
    for (int r = 0; r < 7 - i; ++r) text += " t" + std::to_string(i);
  }
  docs.push_back(make_document("a", "A", text, ""));
  docs.push_back(make_document("b", "B", "other", ""));
  const auto m = build_model(docs, StopwordList{}, FieldMode::Both);

  auto terms = [](const std::vector<TermFrequency>& v) {
    std::vector<std::string> out;
    for (const auto& tf : v) out.push_back(tf.term);
    return out;
  };
  CHECK(terms(systematic_sample(m, "A", 3)) == std::vector<std::string>{"t1", "t3", "t5"});
  CHECK(terms(systematic_sample(m, "A", 6)) == std::vector<std::string>{"t1", "t2", "t3", "t4", "t5", "t6"});
  CHECK(terms(systematic_sample(m, "A", 1)) == std::vector<std::string>{"t1"});
  CHECK(terms(systematic_sample(m, "A", 4)) == std::vector<std::string>{"t1", "t2", "t3", "t4"});
  CHECK(systematic_sample(m, "A", 3)[1].frequency == 4);
  CHECK_THROWS_AS(systematic_sample(m, "A", 7), ConfigError);
  CHECK_THROWS_AS(systematic_sample(m, "A", 0), ConfigError);
  CHECK_THROWS_AS(systematic_sample(m, "Z", 1), ConfigError);
}

TEST_CASE("frequency ties sort lexicographically") {
  std::vector<Document> docs{make_document("a", "A", "pear apple fig fig", ""),
                             make_document("b", "B", "x", "")};
  const auto m = build_model(docs, StopwordList{}, FieldMode::Both);
  const auto sorted = sorted_by_frequency(m, "A");
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0].term == "fig");
  CHECK(sorted[1].term == "apple");
  CHECK(sorted[2].term == "pear");
}

TEST_CASE("from_tables enforces conservation") {
  FrequencyModel::TermTable t;
  t["x"] = TermCounts{3, {1, 1}};
  CHECK_THROWS_AS(FrequencyModel::from_tables({"A", "B"}, FieldMode::Both, StopwordList{}, t, {1, 1}, {1, 1}),
                  ConfigError);
}
