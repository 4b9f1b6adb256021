#include "doctest.h"

#include <random>

#include "sublang/tokenize.hpp"

using sublang::tokenize;
using V = std::vector<std::string>;

TEST_CASE("tokenize folds case and strips punctuation") {
  CHECK(tokenize("Planetary Atmospheres.") == V{"planetary", "atmospheres"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("solar-cell panels, 3D") == V{"solar-cell", "panels", "3d"});
}

TEST_CASE("tokenize hyphens and apostrophes") {
  CHECK(tokenize("-leading trailing- 'quoted' don't") == V{"leading", "trailing", "quoted", "don't"});
  CHECK(tokenize("--- ''") .empty());
  CHECK(tokenize("a.b;c") == V{"a", "b", "c"});
  CHECK(tokenize("  \t\n ").empty());
}

TEST_CASE("tokenize keeps utf-8 bytes inside tokens") {
  CHECK(tokenize("Gödel's theorem") == V{"gödel's", "theorem"});
}

TEST_CASE("tokenize output is normalized and deterministic") {
  std::mt19937 rng(7);
  const std::string alphabet = "aZ9-' .,\t!?xY\xc3\xa9";
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text;
    const int len = static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) text.push_back(alphabet[rng() % alphabet.size()]);
    const auto a = tokenize(text);
    CHECK(a == tokenize(text));
    for (const auto& t : a) CHECK(sublang::is_normalized_token(t));
  }
}
