#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sublang {

/// Splits raw text into lowercase tokens.
///
/// A token is a maximal run of letters, digits, hyphens and apostrophes with
/// the leading and trailing hyphens/apostrophes removed. Bytes >= 0x80 are
/// treated as letters so UTF-8 sequences stay intact; only ASCII is
/// case-folded.
std::vector<std::string> tokenize(std::string_view raw_text);

/// True if `token` could have been produced by tokenize().
bool is_normalized_token(std::string_view token);

}  // namespace sublang
