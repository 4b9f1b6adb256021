#include "sublang/tokenize.hpp"

namespace sublang {

namespace {

bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

bool is_joiner(unsigned char c) { return c == '-' || c == '\''; }

char fold(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

void flush(std::string& chunk, std::vector<std::string>& out) {
  std::size_t first = 0;
  std::size_t last = chunk.size();
  while (first < last && is_joiner(chunk[first])) ++first;
  while (last > first && is_joiner(chunk[last - 1])) --last;
  if (first < last) out.emplace_back(chunk.substr(first, last - first));
  chunk.clear();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw_text) {
  std::vector<std::string> tokens;
  std::string chunk;
  for (unsigned char c : raw_text) {
    if (is_word_byte(c) || is_joiner(c)) {
      chunk.push_back(fold(c));
    } else if (!chunk.empty()) {
      flush(chunk, tokens);
    }
  }
  if (!chunk.empty()) flush(chunk, tokens);
  return tokens;
}

bool is_normalized_token(std::string_view token) {
  if (token.empty()) return false;
  if (is_joiner(token.front()) || is_joiner(token.back())) return false;
  for (unsigned char c : token) {
    if (c >= 'A' && c <= 'Z') return false;
    if (!is_word_byte(c) && !is_joiner(c)) return false;
  }
  return true;
}

}  // namespace sublang
