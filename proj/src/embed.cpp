#include "utbn/embed.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace utbn {

namespace {

int bit_length(unsigned x) { return static_cast<int>(std::bit_width(x)); }

struct BlockEmbedding {
  std::vector<std::pair<int, int>> edges;  // frame-local active cross edges
  std::vector<int> leaf_at_path;           // frame path (1-based) -> shape leaf node
};

/// The proof's induction over a frame of m consecutive paths that behaves
/// like the scaffold for m leaves. Splitting off the smaller child block
/// activates cross edge (l, 1) for each of its paths but the first; inside
/// the block every cross-edge index shifts up by one because index 1 now
/// plays the role of the spine step.
BlockEmbedding embed_block(const TreeShape& shape, int node) {
  if (shape.is_leaf(node)) return {{}, {node}};

  int first = shape.nodes[node].left;
  int second = shape.nodes[node].right;
  // Larger child first; equal sizes keep canonical order (smaller encoding).
  if (shape.nodes[second].leaf_count > shape.nodes[first].leaf_count) std::swap(first, second);
  const int t1 = shape.nodes[first].leaf_count;
  const int m = shape.nodes[node].leaf_count;

  BlockEmbedding big = embed_block(shape, first);
  BlockEmbedding small = embed_block(shape, second);

  BlockEmbedding out;
  out.edges = std::move(big.edges);
  for (int l = t1 + 2; l <= m; ++l) out.edges.push_back({l, 1});
  for (auto [l, j] : small.edges) out.edges.push_back({t1 + l, j + 1});
  out.leaf_at_path = std::move(big.leaf_at_path);
  out.leaf_at_path.insert(out.leaf_at_path.end(), small.leaf_at_path.begin(),
                          small.leaf_at_path.end());

  // The proof's availability bound: between frame paths l-1 and l at most
  // floor(log2(l/2)) cross edges may ever be requested.
  for (auto [l, j] : out.edges)
    if (j > bit_length(static_cast<unsigned>(l)) - 2)
      throw std::logic_error("cross-edge budget exceeded at (" + std::to_string(l) + "," +
                             std::to_string(j) + ") in a frame of " + std::to_string(m));
  return out;
}

/// Labeled tree whose shape is `shape` and whose leaf at canonical position
/// k carries labels[k]; used to cross-check claimed leaf placements.
PhyloTree shape_to_tree(const TreeShape& shape, const std::vector<std::string>& labels) {
  PhyloTree t;
  std::vector<VertexId> remap(shape.nodes.size());
  // Emit in pre-order so ids are deterministic.
  std::vector<int> stack{shape.root};
  std::vector<int> order;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    if (!shape.is_leaf(v)) {
      stack.push_back(shape.nodes[v].right);
      stack.push_back(shape.nodes[v].left);
    }
  }
  for (int v : order) {
    if (shape.is_leaf(v))
      remap[v] = t.add_vertex(VertexKind::Leaf, labels[shape.nodes[v].leaf_index]);
    else
      remap[v] = t.add_vertex(v == shape.root ? VertexKind::Root : VertexKind::TreeVertex);
  }
  for (int v : order)
    if (!shape.is_leaf(v)) {
      t.add_edge(remap[v], remap[shape.nodes[v].left]);
      t.add_edge(remap[v], remap[shape.nodes[v].right]);
    }
  t.root = remap[shape.root];
  return t;
}

}  // namespace

TopEmbedding embed_shape_top(const TreeShape& shape, int n) {
  if (shape.leaf_count() != n)
    throw std::invalid_argument("embed_shape_top: shape has " +
                                std::to_string(shape.leaf_count()) + " leaves, n is " +
                                std::to_string(n));
  TopEmbedding top;
  top.n = n;
  top.shape_enc = shape.encoding();
  top.path_of_leaf.assign(n, 0);

  BlockEmbedding block = embed_block(shape, shape.root);
  for (int p = 1; p <= n; ++p)
    top.path_of_leaf[shape.nodes[block.leaf_at_path[p - 1]].leaf_index] = p;
  for (auto [i, j] : block.edges) top.active.insert({i, j});

  // Postcondition, asserted rather than assumed: the induced choice spans
  // the scaffold and suppresses to the input shape with the claimed leaf
  // placement.
  Scaffold scaffold = build_top_scaffold(n);
  ScaffoldGraph graph = scaffold_graph(scaffold);
  for (auto [i, j] : top.active)
    if (!scaffold.has_cross(i, j))
      throw std::logic_error("active cross edge (" + std::to_string(i) + "," +
                             std::to_string(j) + ") does not exist in the scaffold");
  BaseTreeChoice choice;
  for (int i = 2; i < n; ++i)
    for (int s = 1; s <= scaffold.slots[i]; s += 2) {
      VertexId retic = graph.slot[i][s - 1];
      VertexId vertical = s == 1 ? graph.spine[i] : graph.slot[i][s - 2];
      VertexId cross = graph.slot[i + 1][s];  // v_{i+1, s+1}, the 2j-th slot above
      choice[retic] = top.active.count({i + 1, (s + 1) / 2}) ? cross : vertical;
    }
  ResolveOutcome resolved = resolve_choice(graph.net, choice);
  if (!resolved.ok)
    throw std::logic_error("top embedding does not span the scaffold: " + resolved.error);
  PhyloTree suppressed = suppress_degree_two(resolved.subgraph);

  std::vector<std::string> want_labels(n);
  for (int k = 0; k < n; ++k) want_labels[k] = std::to_string(top.path_of_leaf[k]);
  PhyloTree expected = shape_to_tree(shape, want_labels);
  if (!tree_equal(suppressed, expected))
    throw std::logic_error("top embedding suppression mismatch for shape " + top.shape_enc);
  return top;
}

Permutation required_permutation(const PhyloTree& tree, const TopEmbedding& top) {
  ShapedTree shaped = shape_with_labels(tree);
  if (shaped.shape.encoding() != top.shape_enc)
    throw std::invalid_argument("required_permutation: tree shape differs from embedded shape");
  const int n = top.n;
  Permutation perm(n, -1);
  for (int k = 0; k < n; ++k) {
    const std::string& lab = shaped.leaf_labels[k];
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(lab, &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != lab.size() || value < 1 || value > n)
      throw std::invalid_argument("required_permutation: leaf label \"" + lab +
                                  "\" is not in 1.." + std::to_string(n));
    perm[top.path_of_leaf[k] - 1] = value - 1;
  }
  if (!is_permutation(perm))
    throw std::invalid_argument("required_permutation: labels do not form a permutation");
  return perm;
}

EmbedCertificate embed_tree(const UniversalNet& u, const PhyloTree& tree) {
  std::vector<std::string> want;
  for (int i = 1; i <= u.n; ++i) want.push_back(std::to_string(i));
  std::sort(want.begin(), want.end(), natural_less);
  if (tree.leaf_labels() != want)
    throw std::invalid_argument("embed_tree: tree labels must be exactly 1.." +
                                std::to_string(u.n));

  EmbedCertificate cert;
  ShapedTree shaped = shape_with_labels(tree);
  cert.top = embed_shape_top(shaped.shape, u.n);
  cert.perm = required_permutation(tree, cert.top);
  cert.settings = u.benes.route(cert.perm);

  // Scaffold reticulations: cross in-edge iff the embedding activates it.
  for (int i = 2; i < u.n; ++i)
    for (int s = 1; s <= u.scaffold.slots[i]; s += 2) {
      VertexId retic = u.slot[i][s - 1];
      VertexId vertical = s == 1 ? u.spine[i] : u.slot[i][s - 2];
      VertexId cross = u.slot[i + 1][s];
      cert.choice[retic] = cert.top.active.count({i + 1, (s + 1) / 2}) ? cross : vertical;
    }
  // Switch gadgets: straight keeps both tokens on their paths, crossed
  // trades them.
  for (const auto& sw : u.benes.switches()) {
    const auto& lo = u.switch_vertices[sw.id][0];
    const auto& hi = u.switch_vertices[sw.id][1];
    if (cert.settings[sw.id] == SwitchState::Straight) {
      cert.choice[lo.retic] = lo.tree_vertex;
      cert.choice[hi.retic] = hi.tree_vertex;
    } else {
      cert.choice[lo.retic] = hi.tree_vertex;
      cert.choice[hi.retic] = lo.tree_vertex;
    }
  }

  std::string why;
  if (!verify_base_tree(u.net, cert.choice, tree, &why))
    throw std::logic_error("embedding certificate failed verification: " + why);
  return cert;
}

}  // namespace utbn
