#pragma once

#include <string>
#include <string_view>

namespace chaoskey {

/// Decodes UTF-8 into code points. Invalid bytes are passed through as their
/// own code point (Latin-1 view) instead of raising, so arbitrary byte strings
/// always decode deterministically.
std::u32string decode_utf8_lenient(std::string_view text);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

}  // namespace chaoskey
