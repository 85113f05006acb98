#include "utbn/canonical.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <tuple>

namespace utbn {

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ia = i, jb = j;
      while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
      while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
      std::string_view na(a.data() + i, ia - i), nb(b.data() + j, jb - j);
      // Compare digit runs by value: strip leading zeros, then length, then text.
      std::size_t za = na.find_first_not_of('0'), zb = nb.find_first_not_of('0');
      std::string_view ca = (za == std::string_view::npos) ? na.substr(na.size() - 1) : na.substr(za);
      std::string_view cb = (zb == std::string_view::npos) ? nb.substr(nb.size() - 1) : nb.substr(zb);
      if (ca.size() != cb.size()) return ca.size() < cb.size();
      if (ca != cb) return ca < cb;
      i = ia;
      j = jb;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

namespace {

std::string encode_labeled(const PhyloTree& t, VertexId v) {
  if (t.kind[v] == VertexKind::Leaf)
    return std::to_string(t.label[v].size()) + ":" + t.label[v];
  if (t.children[v].size() != 2)
    throw std::invalid_argument("canonical encoding requires a binary tree");
  std::string a = encode_labeled(t, t.children[v][0]);
  std::string b = encode_labeled(t, t.children[v][1]);
  if (b < a) std::swap(a, b);
  return "(" + a + "," + b + ")";
}

struct Built {
  int node = -1;
  std::string enc;                  // shape encoding
  std::string labeled;              // labeled encoding, breaks shape ties
  std::vector<std::string> labels;  // leaf labels in canonical pre-order
};

Built build_shape(const PhyloTree& tree, VertexId v, TreeShape& shape) {
  if (tree.kind[v] == VertexKind::Leaf) {
    TreeShape::Node n;
    n.leaf_count = 1;
    n.enc = "L";
    shape.nodes.push_back(n);
    return {static_cast<int>(shape.nodes.size() - 1), "L",
            std::to_string(tree.label[v].size()) + ":" + tree.label[v],
            {tree.label[v]}};
  }
  if (tree.children[v].size() != 2)
    throw std::invalid_argument("shape requires a binary tree");
  Built a = build_shape(tree, tree.children[v][0], shape);
  Built b = build_shape(tree, tree.children[v][1], shape);
  if (std::tie(b.enc, b.labeled) < std::tie(a.enc, a.labeled)) std::swap(a, b);
  TreeShape::Node n;
  n.left = a.node;
  n.right = b.node;
  n.leaf_count = shape.nodes[a.node].leaf_count + shape.nodes[b.node].leaf_count;
  n.enc = "(" + a.enc + b.enc + ")";
  shape.nodes.push_back(n);
  Built out;
  out.node = static_cast<int>(shape.nodes.size() - 1);
  out.enc = n.enc;
  out.labeled = "(" + a.labeled + "," + b.labeled + ")";
  out.labels = std::move(a.labels);
  out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
  return out;
}

void index_leaves(TreeShape& shape, int v, int& next) {
  if (shape.is_leaf(v)) {
    shape.nodes[v].leaf_index = next++;
    return;
  }
  index_leaves(shape, shape.nodes[v].left, next);
  index_leaves(shape, shape.nodes[v].right, next);
}

}  // namespace

std::string canonical_encoding(const PhyloTree& tree) {
  if (tree.vertex_count() == 0) return "";
  return encode_labeled(tree, tree.root);
}

bool tree_equal(const PhyloTree& a, const PhyloTree& b) {
  return canonical_encoding(a) == canonical_encoding(b);
}

ShapedTree shape_with_labels(const PhyloTree& tree) {
  ShapedTree out;
  Built top = build_shape(tree, tree.root, out.shape);
  out.shape.root = top.node;
  int next = 0;
  index_leaves(out.shape, top.node, next);
  out.leaf_labels = std::move(top.labels);
  return out;
}

TreeShape shape_of(const PhyloTree& tree) { return shape_with_labels(tree).shape; }

bool shape_equal(const TreeShape& a, const TreeShape& b) {
  return a.encoding() == b.encoding();
}

}  // namespace utbn
