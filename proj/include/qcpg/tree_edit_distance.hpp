#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcpg/parse_tree.hpp"

namespace qcpg {

struct EditCost {
  double insert = 1.0;
  double remove = 1.0;
  double relabel = 1.0;  // charged only when labels differ
};

// Maps labels to dense ids so that two trees can be compared by integer.
class LabelTable {
 public:
  int intern(const ParseTree& node);

 private:
  std::unordered_map<std::string, int> ids_;
};

// Post-order flattening used by the Zhang-Shasha recurrences.
struct PostorderTree {
  std::vector<int> labels;    // label id per node, post-order
  std::vector<int> leftmost;  // post-order index of the leftmost leaf descendant
  std::vector<int> keyroots;  // ascending

  std::size_t size() const { return labels.size(); }

  static PostorderTree from(const ParseTree& tree, LabelTable& table);
  // `parents[i]` is the preorder index of node i's parent (-1 for the root);
  // nodes are given in preorder.
  static PostorderTree from_preorder(const std::vector<int>& parents,
                                     const std::vector<int>& labels);
};

// Zhang-Shasha ordered tree edit distance. Holds scratch buffers so repeated
// calls do not allocate; one instance per thread. Integral costs run on an
// integer kernel.
class TreeEditDistance {
 public:
  explicit TreeEditDistance(EditCost costs = {});

  double operator()(const PostorderTree& a, const PostorderTree& b);

 private:
  EditCost costs_;
  bool integral_;
  std::vector<double> tree_dist_;
  std::vector<double> forest_;
  std::vector<std::int32_t> tree_dist_int_;
  std::vector<std::int32_t> forest_int_;
};

double tree_edit_distance(const ParseTree& a, const ParseTree& b, const EditCost& costs = {});

// Prunes both trees to level 3, strips tokens, and returns unit-cost TED over
// the larger node count, clamped and scaled to [0, 100].
double syntactic_distance(const ParseTree& a, const ParseTree& b);

}  // namespace qcpg
