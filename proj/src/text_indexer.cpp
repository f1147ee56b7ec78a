#include "chaoskey/text_indexer.hpp"

#include <unordered_map>

#include "chaoskey/errors.hpp"

namespace chaoskey::indexer {

namespace {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline bool needs_escape(std::string_view word) {
  return !word.empty() && (is_digit(word.front()) || word.front() == kEscape);
}

// Splits text into leading whitespace, alternating words/separators, and
// trailing whitespace.
struct SplitText {
  std::string leading;
  std::vector<std::string> words;
  std::vector<std::string> separators;
  std::string trailing;
};

SplitText split(std::string_view text) {
  SplitText out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n && is_space(text[i])) ++i;
  out.leading.assign(text.substr(0, i));
  while (i < n) {
    std::size_t start = i;
    while (i < n && !is_space(text[i])) ++i;
    out.words.emplace_back(text.substr(start, i - start));
    if (i == n) break;
    start = i;
    while (i < n && is_space(text[i])) ++i;
    if (i == n) {
      out.trailing.assign(text.substr(start, i - start));
    } else {
      out.separators.emplace_back(text.substr(start, i - start));
    }
  }
  return out;
}

}  // namespace

IndexedMessage index_encode(std::string_view text) {
  SplitText parts = split(text);
  IndexedMessage msg;
  msg.leading = std::move(parts.leading);
  msg.trailing = std::move(parts.trailing);
  msg.separators = std::move(parts.separators);
  msg.tokens.reserve(parts.words.size());

  std::unordered_map<std::string, std::size_t> first_seen;
  for (std::size_t i = 0; i < parts.words.size(); ++i) {
    const std::size_t position = i + 1;
    auto [it, inserted] = first_seen.try_emplace(parts.words[i], position);
    msg.tokens.push_back({inserted ? 0 : it->second, std::move(parts.words[i])});
  }
  return msg;
}

std::string render(const IndexedMessage& msg) {
  std::string out;
  out.reserve(msg.leading.size() + msg.trailing.size() + msg.tokens.size() * 8);
  out += msg.leading;
  for (std::size_t i = 0; i < msg.tokens.size(); ++i) {
    const Token& tok = msg.tokens[i];
    if (i > 0) out += msg.separators[i - 1];
    if (tok.back_ref > 0) out += std::to_string(tok.back_ref);
    if (needs_escape(tok.word)) out += kEscape;
    out += tok.word;
  }
  out += msg.trailing;
  return out;
}

std::string decode(std::string_view rendered) {
  SplitText parts = split(rendered);
  std::string out;
  out.reserve(rendered.size());
  out += parts.leading;

  std::vector<std::string> words;  // decoded words by 1-based position
  words.reserve(parts.words.size());
  for (std::size_t i = 0; i < parts.words.size(); ++i) {
    std::string_view chunk = parts.words[i];
    std::size_t back_ref = 0;
    std::size_t d = 0;
    while (d < chunk.size() && is_digit(chunk[d])) ++d;
    if (d > 0) {
      back_ref = 0;
      for (std::size_t k = 0; k < d; ++k) back_ref = back_ref * 10 + (chunk[k] - '0');
      chunk.remove_prefix(d);
    }
    if (!chunk.empty() && chunk.front() == kEscape) chunk.remove_prefix(1);
    if (chunk.empty()) {
      raise(ErrorCode::malformed_index,
            "token " + std::to_string(i + 1) + " has no word after its prefix");
    }
    if (d > 0) {
      if (back_ref == 0 || back_ref > words.size()) {
        raise(ErrorCode::malformed_index, "back-reference " + std::to_string(back_ref) +
                                              " at token " + std::to_string(i + 1) +
                                              " points outside the message");
      }
      if (words[back_ref - 1] != chunk) {
        raise(ErrorCode::malformed_index, "back-reference " + std::to_string(back_ref) +
                                              " at token " + std::to_string(i + 1) +
                                              " does not match the earlier word");
      }
    }
    words.emplace_back(chunk);
    if (i > 0) out += parts.separators[i - 1];
    out += words.back();
  }
  out += parts.trailing;
  return out;
}

}  // namespace chaoskey::indexer
