#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcpg {

// Multiset of lower-cased tokens, kept as code-point strings.
struct WordBag {
  std::vector<std::u32string> words;
  std::size_t total_chars = 0;

  std::size_t size() const { return words.size(); }
};

// Lower-case, split on Unicode whitespace, trim punctuation at both ends,
// drop empties, keep duplicates.
WordBag tokenize(std::string_view sentence);

// Levenshtein distance over Unicode scalar values.
std::size_t char_edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t char_edit_distance(std::string_view a, std::string_view b);

// Cheapest matching between the bags: matched words pay their edit
// distance, unmatched words pay their length.
std::int64_t bag_assignment_cost(const WordBag& a, const WordBag& b);

// Assignment cost over max(total_chars), clamped and scaled to [0, 100].
double lexical_distance(std::string_view s1, std::string_view s2);

}  // namespace qcpg
