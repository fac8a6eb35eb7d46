#include "qcpg/lexical.hpp"

#include <algorithm>
#include <numeric>

#include "qcpg/assignment.hpp"
#include "qcpg/utf8.hpp"

namespace qcpg {

WordBag tokenize(std::string_view sentence) {
  WordBag bag;
  const std::u32string text = utf8::to_lower(utf8::decode(sentence));
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !utf8::is_space(text[j])) ++j;
    std::size_t b = i, e = j;
    while (b < e && utf8::is_punct(text[b])) ++b;
    while (e > b && utf8::is_punct(text[e - 1])) --e;
    if (b < e) {
      bag.words.emplace_back(text.substr(b, e - b));
      bag.total_chars += e - b;
    }
    i = j;
  }
  return bag;
}

std::size_t char_edit_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0u : 1u)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t char_edit_distance(std::string_view a, std::string_view b) {
  return char_edit_distance(utf8::decode(a), utf8::decode(b));
}

std::int64_t bag_assignment_cost(const WordBag& a, const WordBag& b) {
  // Pad the smaller side with empty words; distance to "" is the length.
  const int n = static_cast<int>(std::max(a.size(), b.size()));
  if (n == 0) return 0;
  std::vector<std::int64_t> cost(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool has_a = i < static_cast<int>(a.size());
      const bool has_b = j < static_cast<int>(b.size());
      std::int64_t c = 0;
      if (has_a && has_b) {
        c = static_cast<std::int64_t>(char_edit_distance(a.words[i], b.words[j]));
      } else if (has_a) {
        c = static_cast<std::int64_t>(a.words[i].size());
      } else if (has_b) {
        c = static_cast<std::int64_t>(b.words[j].size());
      }
      cost[static_cast<std::size_t>(i) * n + j] = c;
    }
  }
  return solve_assignment(cost, n).cost;
}

double lexical_distance(std::string_view s1, std::string_view s2) {
  const WordBag a = tokenize(s1);
  const WordBag b = tokenize(s2);
  const std::size_t denom = std::max(a.total_chars, b.total_chars);
  if (denom == 0) return 0.0;
  const double ratio = static_cast<double>(bag_assignment_cost(a, b)) / static_cast<double>(denom);
  return 100.0 * std::clamp(ratio, 0.0, 1.0);
}

}  // namespace qcpg
