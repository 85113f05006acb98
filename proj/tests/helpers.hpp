#pragma once

#include <string>
#include <vector>

#include "utbn/graph.hpp"
#include "utbn/io.hpp"

namespace utbn::test {

inline PhyloTree tree(const std::string& newick) { return parse_newick(newick); }

inline std::vector<std::string> labels_1_to(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Valid network with one reticulation whose parents lie on one tree path,
/// so no temporal labeling exists: root -> u -> v, u -> r, v -> r.
inline PhyloNetwork untimeable_network() {
  PhyloNetwork net;
  VertexId root = net.add_vertex(VertexKind::Root);
  VertexId u = net.add_vertex(VertexKind::TreeVertex);
  VertexId v = net.add_vertex(VertexKind::TreeVertex);
  VertexId r = net.add_vertex(VertexKind::Reticulation);
  VertexId l1 = net.add_vertex(VertexKind::Leaf, "1");
  VertexId l2 = net.add_vertex(VertexKind::Leaf, "2");
  VertexId l3 = net.add_vertex(VertexKind::Leaf, "3");
  net.add_edge(root, u);
  net.add_edge(root, l3);
  net.add_edge(u, v);
  net.add_edge(u, r);
  net.add_edge(v, r);
  net.add_edge(v, l2);
  net.add_edge(r, l1);
  net.root = root;
  return net;
}

/// Valid network where reticulation r1 is a parent of reticulation r2.
inline PhyloNetwork stacked_network() {
  PhyloNetwork net;
  VertexId root = net.add_vertex(VertexKind::Root);
  VertexId a = net.add_vertex(VertexKind::TreeVertex);
  VertexId b = net.add_vertex(VertexKind::TreeVertex);
  VertexId r1 = net.add_vertex(VertexKind::Reticulation);
  VertexId r2 = net.add_vertex(VertexKind::Reticulation);
  VertexId l1 = net.add_vertex(VertexKind::Leaf, "1");
  VertexId l2 = net.add_vertex(VertexKind::Leaf, "2");
  net.add_edge(root, a);
  net.add_edge(root, b);
  net.add_edge(a, l1);
  net.add_edge(a, r1);
  net.add_edge(b, r1);
  net.add_edge(b, r2);
  net.add_edge(r1, r2);
  net.add_edge(r2, l2);
  net.root = root;
  return net;
}

}  // namespace utbn::test
