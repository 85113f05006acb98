#include "utbn/treegen.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "utbn/canonical.hpp"

namespace utbn {

BigUint count_trees(unsigned n) {
  if (n == 0) throw std::invalid_argument("count_trees(0)");
  BigUint b(1);
  for (unsigned k = 3; k <= n; ++k) b.mul_small(2 * k - 3);
  return b;
}

std::uint64_t count_trees_u64(unsigned n) {
  if (n == 0) throw std::invalid_argument("count_trees_u64(0)");
  if (n > 18) throw std::overflow_error("tree count exceeds 64 bits for n > 18");
  std::uint64_t b = 1;
  for (unsigned k = 3; k <= n; ++k) b *= 2 * k - 3;
  return b;
}

namespace {

/// Mutable builder tree for leaf insertion. Node 0 is the root.
struct Builder {
  struct Node {
    int parent = -1;
    int child[2] = {-1, -1};
    std::string label;  // leaves only
  };
  std::vector<Node> nodes;
  int root = 0;

  explicit Builder(const std::string& first_label) {
    nodes.push_back({});
    nodes[0].label = first_label;
  }

  /// Edges in a fixed traversal: index 0 is the root edge, then the out-edges
  /// of each vertex in pre-order, first child before second.
  void collect_edges(std::vector<std::pair<int, int>>& edges) const {
    edges.clear();
    edges.push_back({-1, root});
    collect_from(root, edges);
  }

  void collect_from(int v, std::vector<std::pair<int, int>>& edges) const {
    for (int side = 0; side < 2; ++side) {
      int c = nodes[v].child[side];
      if (c < 0) continue;
      edges.push_back({v, c});
      collect_from(c, edges);
    }
  }

  void insert_leaf(const std::pair<int, int>& edge, const std::string& label) {
    int mid = static_cast<int>(nodes.size());
    nodes.push_back({});
    int leaf = static_cast<int>(nodes.size());
    nodes.push_back({});
    nodes[leaf].label = label;
    nodes[leaf].parent = mid;
    auto [u, v] = edge;
    nodes[mid].child[0] = v;
    nodes[mid].child[1] = leaf;
    nodes[mid].parent = u;
    nodes[v].parent = mid;
    if (u < 0) {
      root = mid;
    } else {
      for (int side = 0; side < 2; ++side)
        if (nodes[u].child[side] == v) nodes[u].child[side] = mid;
    }
  }

  PhyloTree to_tree() const {
    PhyloTree out;
    std::vector<VertexId> remap(nodes.size());
    // Pre-order emission keeps vertex ids deterministic.
    std::vector<int> stack{root};
    std::vector<int> order;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int side = 1; side >= 0; --side)
        if (nodes[v].child[side] >= 0) stack.push_back(nodes[v].child[side]);
    }
    for (int v : order) {
      const bool leaf = nodes[v].child[0] < 0;
      VertexKind k = leaf ? VertexKind::Leaf
                          : (v == root ? VertexKind::Root : VertexKind::TreeVertex);
      if (order.size() == 1) k = VertexKind::Leaf;
      remap[v] = out.add_vertex(k, nodes[v].label);
    }
    for (int v : order)
      for (int side = 0; side < 2; ++side)
        if (nodes[v].child[side] >= 0) out.add_edge(remap[v], remap[nodes[v].child[side]]);
    out.root = remap[root];
    return out;
  }
};

PhyloTree tree_from_code(const std::vector<std::string>& labels,
                         const std::vector<std::uint64_t>& code) {
  Builder builder(labels[0]);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < labels.size(); ++k) {
    builder.collect_edges(edges);
    builder.insert_leaf(edges[code[k - 1]], labels[k]);
  }
  return builder.to_tree();
}

}  // namespace

TreeEnumerator::TreeEnumerator(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("TreeEnumerator: no labels");
  std::sort(labels_.begin(), labels_.end(), natural_less);
  if (labels_.size() > 18) throw std::overflow_error("enumeration index exceeds 64 bits for n > 18");
  for (std::size_t k = 3; k <= labels_.size(); ++k) size_ *= 2 * k - 3;
}

PhyloTree TreeEnumerator::tree_at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("tree index out of range");
  const std::size_t n = labels_.size();
  std::vector<std::uint64_t> code(n > 0 ? n - 1 : 0, 0);
  // Mixed radix, most significant digit first: digit k-1 has radix 2k-3.
  for (std::size_t k = n; k >= 2; --k) {
    const std::uint64_t radix = 2 * k - 3;
    code[k - 2] = index % radix;
    index /= radix;
  }
  return tree_from_code(labels_, code);
}

void TreeEnumerator::for_each(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, const PhyloTree&)>& fn) const {
  for (std::uint64_t i = begin; i < end && i < size_; ++i) fn(i, tree_at(i));
}

PhyloTree random_tree(std::vector<std::string> labels, std::uint64_t seed) {
  if (labels.empty()) throw std::invalid_argument("random_tree: no labels");
  std::sort(labels.begin(), labels.end(), natural_less);
  std::mt19937_64 rng(seed);
  // Rejection-sampled bounded draw, identical on every platform.
  auto draw = [&rng](std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  };
  std::vector<std::uint64_t> code;
  for (std::size_t k = 2; k <= labels.size(); ++k) code.push_back(draw(2 * k - 3));
  return tree_from_code(labels, code);
}

}  // namespace utbn
