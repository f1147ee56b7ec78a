#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chaoskey::indexer {

/// Escape prepended when rendering a word that would otherwise be read as a
/// back-reference (first character is a decimal digit) or as an escape itself.
inline constexpr char kEscape = '\x1B';

struct Token {
  std::size_t back_ref = 0;  // 0 = first occurrence, else 1-based token position
  std::string word;          // non-empty, no whitespace

  bool operator==(const Token&) const = default;
};

/// Word-indexed message. Words are maximal runs of non-whitespace bytes;
/// separators are the whitespace runs between consecutive words, kept
/// verbatim. Leading/trailing whitespace is held separately so a rendered
/// message decodes back to the original text byte for byte.
struct IndexedMessage {
  std::vector<Token> tokens;
  std::vector<std::string> separators;  // size = tokens.size() - 1 (or 0)
  std::string leading;
  std::string trailing;

  bool operator==(const IndexedMessage&) const = default;
};

/// Indexes repeated words: the first occurrence of each distinct word gets
/// back_ref 0, every repeat points at the 1-based position of that first
/// occurrence. Comparison is exact (case- and punctuation-sensitive).
IndexedMessage index_encode(std::string_view text);

/// Flattens the message: bare word for first occurrences, decimal position
/// digits prepended for repeats, escape applied to ambiguous words,
/// separators interleaved verbatim.
std::string render(const IndexedMessage& msg);

/// Exact inverse of render over index_encode output. Throws MalformedIndex
/// when a digit prefix points at a missing or different earlier word.
std::string decode(std::string_view rendered);

}  // namespace chaoskey::indexer
