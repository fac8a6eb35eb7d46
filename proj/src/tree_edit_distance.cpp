#include "qcpg/tree_edit_distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

namespace qcpg {

int LabelTable::intern(const ParseTree& node) {
  // Tokens and structural nodes live in separate label spaces.
  std::string key;
  key.reserve(node.label.size() + 1);
  key += node.terminal ? 't' : 'n';
  key += node.label;
  auto [it, inserted] = ids_.try_emplace(std::move(key), static_cast<int>(ids_.size()));
  return it->second;
}

namespace {

void finish_keyroots(PostorderTree& t) {
  // A keyroot is the highest-numbered node for each distinct leftmost leaf.
  const int n = static_cast<int>(t.size());
  std::vector<int> highest(n, -1);
  for (int i = 0; i < n; ++i) highest[t.leftmost[i]] = i;
  for (int i = 0; i < n; ++i) {
    if (highest[i] >= 0) t.keyroots.push_back(highest[i]);
  }
  std::sort(t.keyroots.begin(), t.keyroots.end());
}

}  // namespace

PostorderTree PostorderTree::from(const ParseTree& tree, LabelTable& table) {
  PostorderTree t;
  const std::size_t n = tree.node_count();
  t.labels.reserve(n);
  t.leftmost.reserve(n);
  std::function<int(const ParseTree&)> visit = [&](const ParseTree& node) -> int {
    int first_leaf = -1;
    for (const auto& child : node.children) {
      const int lm = visit(child);
      if (first_leaf < 0) first_leaf = lm;
    }
    const int index = static_cast<int>(t.labels.size());
    t.labels.push_back(table.intern(node));
    t.leftmost.push_back(first_leaf < 0 ? index : first_leaf);
    return t.leftmost.back();
  };
  visit(tree);
  finish_keyroots(t);
  return t;
}

PostorderTree PostorderTree::from_preorder(const std::vector<int>& parents,
                                           const std::vector<int>& labels) {
  const int n = static_cast<int>(parents.size());
  std::vector<std::vector<int>> kids(n);
  for (int i = 1; i < n; ++i) kids[parents[i]].push_back(i);

  PostorderTree t;
  t.labels.reserve(n);
  t.leftmost.reserve(n);
  std::function<int(int)> visit = [&](int v) -> int {
    int first_leaf = -1;
    for (int c : kids[v]) {
      const int lm = visit(c);
      if (first_leaf < 0) first_leaf = lm;
    }
    const int index = static_cast<int>(t.labels.size());
    t.labels.push_back(labels[v]);
    t.leftmost.push_back(first_leaf < 0 ? index : first_leaf);
    return t.leftmost.back();
  };
  if (n > 0) visit(0);
  finish_keyroots(t);
  return t;
}

namespace {

// One Zhang-Shasha forest table for keyroots (i, j). `td` holds tree
// distances between all subtree pairs computed so far.
template <typename T>
void forest_table(const PostorderTree& a, const PostorderTree& b, int i, int j, T ins_cost,
                  T del_cost, T rel_cost, T* fd, T* td) {
  const int nb = static_cast<int>(b.size());
  const int li = a.leftmost[i];
  const int lj = b.leftmost[j];
  const int rows = i - li + 2;
  const int cols = j - lj + 2;
  const int* a_lm = a.leftmost.data();
  const int* b_lm = b.leftmost.data();
  const int* a_lab = a.labels.data();
  const int* b_lab = b.labels.data();

  fd[0] = 0;
  for (int x = 1; x < rows; ++x) fd[x * cols] = fd[(x - 1) * cols] + del_cost;
  for (int y = 1; y < cols; ++y) fd[y] = fd[y - 1] + ins_cost;

  for (int x = 1; x < rows; ++x) {
    const int ai = li + x - 1;
    const bool a_whole = a_lm[ai] == li;
    const T* forest_row = fd + (a_lm[ai] - li) * cols - lj;
    T* cur = fd + x * cols;
    const T* prev = cur - cols;
    T* td_row = td + ai * nb;
    T left = cur[0];
    for (int y = 1; y < cols; ++y) {
      const int bj = lj + y - 1;
      const T step = std::min(prev[y] + del_cost, left + ins_cost);
      if (a_whole && b_lm[bj] == lj) {
        // Both prefixes are whole subtrees: the cell is a tree distance.
        left = std::min(step, prev[y - 1] + (a_lab[ai] == b_lab[bj] ? T{0} : rel_cost));
        td_row[bj] = left;
      } else {
        left = std::min(step, forest_row[b_lm[bj]] + td_row[bj]);
      }
      cur[y] = left;
    }
  }
}

template <typename T>
T zhang_shasha(const PostorderTree& a, const PostorderTree& b, T ins, T del, T rel,
               std::vector<T>& td, std::vector<T>& fd) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  td.assign(static_cast<std::size_t>(na) * nb, T{0});
  fd.resize(static_cast<std::size_t>(na + 1) * (nb + 1));
  for (int i : a.keyroots) {
    for (int j : b.keyroots) forest_table(a, b, i, j, ins, del, rel, fd.data(), td.data());
  }
  return td[static_cast<std::size_t>(na - 1) * nb + (nb - 1)];
}

bool small_integer(double v) { return v == std::floor(v) && v <= 1 << 20; }

}  // namespace

TreeEditDistance::TreeEditDistance(EditCost costs)
    : costs_(costs),
      integral_(small_integer(costs.insert) && small_integer(costs.remove) &&
                small_integer(costs.relabel)) {}

double TreeEditDistance::operator()(const PostorderTree& a, const PostorderTree& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  if (na == 0) return nb * costs_.insert;
  if (nb == 0) return na * costs_.remove;
  if (integral_) {
    return static_cast<double>(zhang_shasha<std::int32_t>(
        a, b, static_cast<std::int32_t>(costs_.insert), static_cast<std::int32_t>(costs_.remove),
        static_cast<std::int32_t>(costs_.relabel), tree_dist_int_, forest_int_));
  }
  return zhang_shasha<double>(a, b, costs_.insert, costs_.remove, costs_.relabel, tree_dist_,
                              forest_);
}

double tree_edit_distance(const ParseTree& a, const ParseTree& b, const EditCost& costs) {
  LabelTable table;
  const auto pa = PostorderTree::from(a, table);
  const auto pb = PostorderTree::from(b, table);
  TreeEditDistance ted(costs);
  return ted(pa, pb);
}

double syntactic_distance(const ParseTree& a, const ParseTree& b) {
  const ParseTree pa = strip_tokens(prune_to_level(a, 3));
  const ParseTree pb = strip_tokens(prune_to_level(b, 3));
  const double denom = static_cast<double>(std::max(pa.node_count(), pb.node_count()));
  const double ratio = tree_edit_distance(pa, pb) / denom;
  return 100.0 * std::clamp(ratio, 0.0, 1.0);
}

}  // namespace qcpg
