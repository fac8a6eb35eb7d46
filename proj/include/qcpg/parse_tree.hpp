#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qcpg {

// Labeled ordered tree read from Penn-Treebank-style bracketed text.
//
// Bracketed nodes `(X ...)` are structure. A bare word inside a node, as in
// `(DT the)`, is a surface token: a leaf with `terminal == true`. A childless
// bracketed node such as `(B)` is structure, not a token.
struct ParseTree {
  std::string label;
  bool terminal = false;
  std::vector<ParseTree> children;

  ParseTree() = default;
  explicit ParseTree(std::string label_, std::vector<ParseTree> children_ = {})
      : label(std::move(label_)), children(std::move(children_)) {}

  static ParseTree token(std::string word) {
    ParseTree t(std::move(word));
    t.terminal = true;
    return t;
  }

  bool is_leaf() const { return children.empty(); }
  std::size_t node_count() const;
  std::size_t depth() const;

  friend bool operator==(const ParseTree&, const ParseTree&) = default;
};

// Throws LocatedError (UnbalancedParens, EmptyLabel, TrailingInput) carrying
// the byte offset of the problem.
ParseTree parse_bracketed(std::string_view text);

// Inverse of parse_bracketed: `(A (B c) (D))`.
std::string render(const ParseTree& tree);

// Keeps nodes at depth <= level, the root being level 1. Level 0 is treated
// as 1.
ParseTree prune_to_level(const ParseTree& tree, std::size_t level = 3);

// Removes surface tokens; part-of-speech nodes above them stay.
ParseTree strip_tokens(const ParseTree& tree);

}  // namespace qcpg
