#include "sublang/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sublang/error.hpp"

namespace sublang {

namespace {

constexpr std::string_view kConsonants = "bdgklmnprstvz";
constexpr std::string_view kVowels = "aeiou";
constexpr std::size_t kSyllables = 13 * 5;
constexpr std::size_t kWordSpace = kSyllables * kSyllables * kSyllables;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  // Knuth's product method; rates here are small.
  std::size_t poisson(double rate) {
    const double limit = std::exp(-rate);
    std::size_t k = 0;
    double p = uniform();
    while (p > limit) {
      ++k;
      p *= uniform();
    }
    return k;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 rng_;
};

class Zipf {
 public:
  Zipf(std::size_t n, double exponent) : cdf_(n) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      sum += 1.0 / std::pow(static_cast<double>(r + 1), exponent);
      cdf_[r] = sum;
    }
    for (auto& c : cdf_) c /= sum;
  }

  std::size_t draw(Sampler& s) const {
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), s.uniform());
    return std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

std::string sentence(std::vector<std::string> words, Sampler& s) {
  s.shuffle(words);
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  if (!out.empty()) {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
    out.push_back('.');
  }
  return out;
}

}  // namespace

std::string synthetic_word(std::size_t index) {
  if (index >= kWordSpace) throw ConfigError("synthetic vocabulary exhausted");
  std::string w;
  for (int k = 0; k < 3; ++k) {
    const std::size_t syl = index % kSyllables;
    index /= kSyllables;
    w.push_back(kConsonants[syl / kVowels.size()]);
    w.push_back(kVowels[syl % kVowels.size()]);
  }
  return w;
}

std::vector<RawRecord> generate_corpus(const SyntheticConfig& config) {
  if (config.disciplines.size() < 2) throw ConfigError("synthetic corpus needs at least 2 disciplines");
  if (config.signature_vocabulary == 0 || config.background_vocabulary == 0)
    throw ConfigError("synthetic vocabularies must be non-empty");

  Sampler s(config.seed);
  const Zipf background(config.background_vocabulary, config.zipf_exponent);
  auto signature_word = [&](std::size_t disc, std::size_t j) {
    return synthetic_word(config.background_vocabulary + disc * config.signature_vocabulary + j);
  };
  auto field = [&](std::size_t disc, std::size_t n_background) {
    std::vector<std::string> words;
    const std::size_t n_signature = s.poisson(config.signature_rate);
    for (std::size_t i = 0; i < n_signature; ++i)
      words.push_back(signature_word(disc, s.index(config.signature_vocabulary)));
    for (std::size_t i = 0; i < n_background; ++i) words.push_back(synthetic_word(background.draw(s)));
    return sentence(std::move(words), s);
  };

  std::vector<RawRecord> out;
  for (std::size_t d = 0; d < config.disciplines.size(); ++d) {
    for (std::size_t i = 0; i < config.docs_per_discipline; ++i) {
      RawRecord r;
      r.id = config.disciplines[d] + "-" + std::to_string(i + 1);
      r.discipline = config.disciplines[d];
      r.title = field(d, config.title_background);
      for (std::size_t k = 0; k < config.abstract_sentences; ++k) {
        if (!r.abstract.empty()) r.abstract.push_back(' ');
        r.abstract += field(d, config.sentence_background);
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace sublang
