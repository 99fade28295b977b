#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morphy {

enum class TagSetKind { small, large };

std::string_view to_string(TagSetKind kind);
TagSetKind parse_tagset_kind(std::string_view s);

// Feature dimensions of the large tag set, in canonical output order.
enum class Dimension : std::uint8_t { declension, person, case_, gender, number, tense, degree, usage };
inline constexpr std::size_t kDimensionCount = 8;

std::string_view dimension_name(Dimension d);
std::span<const std::string_view> dimension_values(Dimension d);

class TagError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A part-of-speech tag. Small tags are one of the 51 codes and never carry
/// features; large tags pair a base code with at most one value per dimension.
struct Tag {
  std::string pos;
  std::array<std::uint8_t, kDimensionCount> features{};  // 0 = unset, else 1-based value index
  TagSetKind kind = TagSetKind::large;

  std::optional<std::string_view> feature(Dimension d) const;
  bool has(Dimension d) const { return features[static_cast<std::size_t>(d)] != 0; }
  bool has_features() const;
  // Throws TagError when `value` is not a value of `d`.
  Tag& set(Dimension d, std::string_view value);
  Tag& clear(Dimension d);

  friend bool operator==(const Tag&, const Tag&) = default;
};

Tag make_small(std::string_view code);

/// Parses a space-separated tag string. Feature tokens after the base code may
/// appear in any order; Fig.-4 style pronoun spellings ("PER PRO", "POS ATT",
/// "DEM NOM SIN NEU PRO") are accepted. Throws TagError.
Tag parse_tag(std::string_view s, TagSetKind kind);

std::string format_tag(const Tag& t);

/// True when the tag is a member of its tag set.
bool is_valid(const Tag& t);

/// Total, deterministic projection of a large tag onto the small set.
Tag map_large_to_small(const Tag& t);

/// Maps to `kind`: identity for matching kinds, map_large_to_small for
/// large->small. Small->large throws.
Tag to_kind(const Tag& t, TagSetKind kind);

/// The 51 small codes in table order.
const std::vector<std::string>& small_codes();

class TagSet {
 public:
  static const TagSet& get(TagSetKind kind);

  TagSetKind kind() const { return kind_; }
  // Sorted by canonical string.
  const std::vector<Tag>& members() const { return members_; }
  const std::vector<std::string>& member_strings() const { return strings_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Tag& t) const;
  bool contains(std::string_view canonical) const;

 private:
  explicit TagSet(TagSetKind kind);

  TagSetKind kind_;
  std::vector<Tag> members_;
  std::vector<std::string> strings_;
};

bool is_punctuation(const Tag& t);
// Open word classes: nouns, names, full verbs, adjectives.
bool is_open_class(const Tag& t);

}  // namespace morphy
