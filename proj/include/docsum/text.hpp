#pragma once

// UTF-8 helpers shared by the tokenizer, segmenter and recognizer.  Case
// folding covers Latin, Greek and Cyrillic, which is what the supported
// languages (uk, en) need.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace docsum::text {

inline constexpr char32_t kInvalidCodepoint = 0xFFFD;

// Decodes the code point starting at `pos` and advances `pos` past it.
// Malformed sequences yield kInvalidCodepoint and advance by one byte.
char32_t next_codepoint(std::string_view s, std::size_t& pos) noexcept;

void append_utf8(std::string& out, char32_t cp);

bool is_valid_utf8(std::string_view s) noexcept;

std::size_t codepoint_count(std::string_view s) noexcept;

char32_t fold_case(char32_t cp) noexcept;
bool is_letter(char32_t cp) noexcept;
bool is_upper(char32_t cp) noexcept;
bool is_digit(char32_t cp) noexcept;
bool is_space(char32_t cp) noexcept;
// Letters, digits and combining marks.
bool is_word_char(char32_t cp) noexcept;
// Apostrophes that may join two letters inside a word ("з'явився").
bool is_apostrophe(char32_t cp) noexcept;

std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s) noexcept;

// Case-insensitive substring search; returns byte offset into `haystack`
// or npos.
std::size_t find_folded(std::string_view haystack, std::string_view needle);

std::vector<std::string_view> split_lines(std::string_view s);

}  // namespace docsum::text
