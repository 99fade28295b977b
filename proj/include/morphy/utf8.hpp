#pragma once

#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 helpers for German text. Only the Latin-1 letters that occur
// in German orthography (ä ö ü ß and their capitals) get case mapping.
namespace morphy::utf8 {

// Splits into code points, each returned as its encoded byte sequence.
std::vector<std::string> chars(std::string_view s);

// Number of code points.
std::size_t length(std::string_view s);

// Byte offset of the code point at index `n` (n may equal length()).
std::size_t offset_of(std::string_view s, std::size_t n);

// Last `n` code points (whole string if shorter).
std::string_view last_chars(std::string_view s, std::size_t n);

bool is_upper_initial(std::string_view s);
std::string lower_initial(std::string_view s);
std::string upper_initial(std::string_view s);
std::string to_lower(std::string_view s);

bool is_vowel(std::string_view ch);
bool is_consonant(std::string_view ch);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string_view trim(std::string_view s);

}  // namespace morphy::utf8
