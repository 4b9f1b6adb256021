#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sublang/io.hpp"

namespace sublang {

/// Parameters of the planted-vocabulary corpus generator.
///
/// Every discipline owns `signature_vocabulary` terms nobody else uses. A
/// title carries Poisson(signature_rate) signature tokens plus
/// `title_background` tokens from a Zipfian background shared by all
/// disciplines; each abstract sentence does the same with
/// `sentence_background` background tokens.
struct SyntheticConfig {
  std::uint64_t seed = 1994;
  std::vector<std::string> disciplines{"bio", "econ", "elec", "hist", "math", "phys", "psych", "soc"};
  std::size_t docs_per_discipline = 50;
  std::size_t signature_vocabulary = 40;
  double signature_rate = 3.0;
  std::size_t background_vocabulary = 2000;
  double zipf_exponent = 1.0;
  std::size_t title_background = 6;
  std::size_t abstract_sentences = 5;
  std::size_t sentence_background = 12;
};

/// Deterministic across platforms for a given config: uses its own samplers
/// on top of std::mt19937_64 rather than the implementation-defined
/// std distributions.
std::vector<RawRecord> generate_corpus(const SyntheticConfig& config);

/// Pseudo-word for an index; distinct indices give distinct words.
std::string synthetic_word(std::size_t index);

}  // namespace sublang
