#include "qcpg/parse_tree.hpp"

#include <algorithm>

#include "qcpg/errors.hpp"

namespace qcpg {

namespace {

bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_delim(char c) { return is_blank(c) || c == '(' || c == ')'; }

void render_into(const ParseTree& t, std::string& out) {
  if (t.terminal) {
    out += t.label;
    return;
  }
  out += '(';
  out += t.label;
  for (const auto& child : t.children) {
    out += ' ';
    render_into(child, out);
  }
  out += ')';
}

ParseTree prune_rec(const ParseTree& t, std::size_t remaining) {
  ParseTree copy;
  copy.label = t.label;
  copy.terminal = t.terminal;
  if (remaining > 1) {
    copy.children.reserve(t.children.size());
    for (const auto& c : t.children) copy.children.push_back(prune_rec(c, remaining - 1));
  }
  return copy;
}

}  // namespace

std::size_t ParseTree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

std::size_t ParseTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

ParseTree parse_bracketed(std::string_view text) {
  std::size_t pos = 0;
  auto skip_blank = [&] {
    while (pos < text.size() && is_blank(text[pos])) ++pos;
  };
  auto read_word = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && !is_delim(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip_blank();
  if (pos >= text.size() || text[pos] != '(') {
    throw LocatedError(ErrorCode::kUnbalancedParens, "expected '(' to open the tree", pos);
  }

  // Open nodes, innermost last, with the offset of their '('.
  std::vector<std::pair<ParseTree, std::size_t>> open;
  ParseTree root;
  bool done = false;
  while (!done) {
    skip_blank();
    if (pos >= text.size()) {
      const std::size_t at = open.empty() ? pos : open.back().second;
      throw LocatedError(ErrorCode::kUnbalancedParens, "unclosed '('", at);
    }
    const char c = text[pos];
    if (c == '(') {
      const std::size_t open_at = pos++;
      skip_blank();
      std::string label = read_word();
      if (label.empty()) {
        throw LocatedError(ErrorCode::kEmptyLabel, "node without a label", open_at);
      }
      open.emplace_back(ParseTree(std::move(label)), open_at);
    } else if (c == ')') {
      if (open.empty()) {
        throw LocatedError(ErrorCode::kUnbalancedParens, "unmatched ')'", pos);
      }
      ++pos;
      ParseTree node = std::move(open.back().first);
      open.pop_back();
      if (open.empty()) {
        root = std::move(node);
        done = true;
      } else {
        open.back().first.children.push_back(std::move(node));
      }
    } else {
      open.back().first.children.push_back(ParseTree::token(read_word()));
    }
  }

  skip_blank();
  if (pos != text.size()) {
    throw LocatedError(ErrorCode::kTrailingInput, "unexpected input after the tree", pos);
  }
  return root;
}

std::string render(const ParseTree& tree) {
  std::string out;
  render_into(tree, out);
  return out;
}

ParseTree prune_to_level(const ParseTree& tree, std::size_t level) {
  return prune_rec(tree, std::max<std::size_t>(level, 1));
}

ParseTree strip_tokens(const ParseTree& tree) {
  ParseTree copy;
  copy.label = tree.label;
  copy.terminal = tree.terminal;
  for (const auto& c : tree.children) {
    if (!c.terminal) copy.children.push_back(strip_tokens(c));
  }
  return copy;
}

}  // namespace qcpg
