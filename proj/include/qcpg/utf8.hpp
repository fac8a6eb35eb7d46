#pragma once

#include <string>
#include <string_view>

// Minimal UTF-8 helpers. Invalid byte sequences decode to U+FFFD.
namespace qcpg::utf8 {

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);

// Simple case mapping for Latin, Greek and Cyrillic; other scripts unchanged.
char32_t to_lower(char32_t c);
std::u32string to_lower(std::u32string_view text);
bool is_upper(char32_t c);

bool is_space(char32_t c);
// ASCII punctuation, Latin-1 punctuation, General Punctuation and CJK
// punctuation blocks.
bool is_punct(char32_t c);
bool is_digit(char32_t c);

}  // namespace qcpg::utf8
