#pragma once

#include <string>
#include <vector>

#include "utbn/graph.hpp"

namespace utbn {

/// Numeric-aware string comparison: digit runs compare by value, everything
/// else byte-wise, so "leaf2" < "leaf10".
bool natural_less(const std::string& a, const std::string& b);

/// Canonical encoding of a labeled rooted binary tree. Children are ordered
/// by encoding, labels are length-prefixed, so two trees are equal (labeled
/// rooted isomorphism) iff their encodings match.
std::string canonical_encoding(const PhyloTree& tree);

bool tree_equal(const PhyloTree& a, const PhyloTree& b);

/// Unlabeled rooted binary tree in canonical form: at every internal node
/// the child with the lexicographically smaller encoding comes first.
/// Leaves are indexed 0..n-1 in canonical pre-order.
struct TreeShape {
  struct Node {
    int left = -1;
    int right = -1;
    int leaf_index = -1;  // set for leaves
    int leaf_count = 0;
    std::string enc;
  };
  std::vector<Node> nodes;
  int root = -1;

  bool is_leaf(int v) const { return nodes[v].left < 0; }
  int leaf_count() const { return root < 0 ? 0 : nodes[root].leaf_count; }
  const std::string& encoding() const { return nodes[root].enc; }
};

/// Shape plus the labels sitting at each canonical leaf position. The same
/// comparator orders children for the shape and for the label assignment
/// (shape encoding first, labeled encoding to break ties), so leaf position
/// k of `shape` carries `leaf_labels[k]`.
struct ShapedTree {
  TreeShape shape;
  std::vector<std::string> leaf_labels;
};

ShapedTree shape_with_labels(const PhyloTree& tree);

TreeShape shape_of(const PhyloTree& tree);

bool shape_equal(const TreeShape& a, const TreeShape& b);

}  // namespace utbn
