#include "morphy/utf8.hpp"

#include <array>
#include <utility>

namespace morphy::utf8 {

namespace {

std::size_t seq_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kUmlautCase{{
    {"ä", "Ä"},
    {"ö", "Ö"},
    {"ü", "Ü"},
}};

std::string map_char(std::string_view ch, bool to_upper) {
  if (ch.size() == 1) {
    char c = ch[0];
    if (to_upper && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    if (!to_upper && c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return std::string(1, c);
  }
  for (const auto& [lo, up] : kUmlautCase) {
    if (to_upper && ch == lo) return std::string(up);
    if (!to_upper && ch == up) return std::string(lo);
  }
  return std::string(ch);
}

std::string_view first_char(std::string_view s) {
  if (s.empty()) return s;
  return s.substr(0, std::min(s.size(), seq_len(static_cast<unsigned char>(s[0]))));
}

}  // namespace

std::vector<std::string> chars(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t n = std::min(s.size() - i, seq_len(static_cast<unsigned char>(s[i])));
    out.emplace_back(s.substr(i, n));
    i += n;
  }
  return out;
}

std::size_t length(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size();) {
    i += seq_len(static_cast<unsigned char>(s[i]));
    ++n;
  }
  return n;
}

std::size_t offset_of(std::string_view s, std::size_t n) {
  std::size_t i = 0;
  while (n > 0 && i < s.size()) {
    i += seq_len(static_cast<unsigned char>(s[i]));
    --n;
  }
  return std::min(i, s.size());
}

std::string_view last_chars(std::string_view s, std::size_t n) {
  std::size_t len = length(s);
  if (n >= len) return s;
  return s.substr(offset_of(s, len - n));
}

bool is_upper_initial(std::string_view s) {
  auto c = first_char(s);
  if (c.empty()) return false;
  return map_char(c, false) != c;
}

std::string lower_initial(std::string_view s) {
  auto c = first_char(s);
  return map_char(c, false) + std::string(s.substr(c.size()));
}

std::string upper_initial(std::string_view s) {
  auto c = first_char(s);
  return map_char(c, true) + std::string(s.substr(c.size()));
}

std::string to_lower(std::string_view s) {
  std::string out;
  for (const auto& c : chars(s)) out += map_char(c, false);
  return out;
}

bool is_vowel(std::string_view ch) {
  static constexpr std::array<std::string_view, 16> kVowels{
      "a", "e", "i", "o", "u", "ä", "ö", "ü", "A", "E", "I", "O", "U", "Ä", "Ö", "Ü"};
  for (auto v : kVowels)
    if (v == ch) return true;
  return false;
}

bool is_consonant(std::string_view ch) {
  if (ch == "ß") return true;
  if (ch.size() != 1) return false;
  char c = ch[0];
  bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  return alpha && !is_vowel(ch);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace morphy::utf8
