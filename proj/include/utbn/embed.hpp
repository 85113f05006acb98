#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "utbn/benes.hpp"
#include "utbn/canonical.hpp"
#include "utbn/construct.hpp"
#include "utbn/graph.hpp"

namespace utbn {

/// How a tree shape sits inside the scaffold: which cross edges the induced
/// choice activates (a reticulation slot takes its cross in-edge iff that
/// edge is active, its in-path edge otherwise) and which path each shape
/// leaf exits on.
struct TopEmbedding {
  int n = 0;
  std::string shape_enc;
  std::set<std::pair<int, int>> active;  // (i, j): v_{i,2j} -> v_{i-1,2j-1} kept
  std::vector<int> path_of_leaf;         // canonical shape leaf index -> path in 1..n
};

/// Embeds the shape into the scaffold so that every scaffold vertex is used.
/// The recursion splits the shape at the root into the larger part (paths
/// 1..t1, structurally a smaller scaffold) and the smaller part (paths
/// t1+1..n, detached from the spine by activating the first cross edge into
/// each of its paths); nested splits shift cross-edge indices up by one, so
/// surplus cross edges nearest the leaves stay unused. The result is checked
/// against the scaffold graph before returning, never assumed.
TopEmbedding embed_shape_top(const TreeShape& shape, int n);

/// Permutation the bottom half must realize: position i (the label exiting
/// the scaffold on path i) must be routed to output position pi(i). Requires
/// the tree's labels to be 1..n and its shape to match the embedding.
Permutation required_permutation(const PhyloTree& tree, const TopEmbedding& top);

struct EmbedCertificate {
  BaseTreeChoice choice;
  TopEmbedding top;
  Permutation perm;
  SwitchSettings settings;
};

/// Full pipeline: embed the shape in the scaffold, route the leaf
/// permutation through the switch gadgets, translate both into one in-edge
/// choice per reticulation of U_n, and verify it is a base tree for the
/// input before returning.
EmbedCertificate embed_tree(const UniversalNet& u, const PhyloTree& tree);

}  // namespace utbn
