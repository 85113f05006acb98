#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace utbn {

using VertexId = std::uint32_t;

enum class VertexKind : std::uint8_t { Root, TreeVertex, Reticulation, Leaf };

const char* to_string(VertexKind k);

/// Rooted phylogenetic network: acyclic digraph with typed vertices and
/// labeled leaves. A tree is the zero-reticulation special case; helpers
/// that require a tree say so in their contract.
struct PhyloNetwork {
  std::vector<VertexKind> kind;
  std::vector<std::vector<VertexId>> children;
  std::vector<std::vector<VertexId>> parents;
  std::vector<std::string> label;  // non-empty for leaves only
  VertexId root = 0;

  std::size_t vertex_count() const { return kind.size(); }
  std::size_t edge_count() const;

  VertexId add_vertex(VertexKind k, std::string leaf_label = {});
  void add_edge(VertexId parent, VertexId child);

  std::size_t in_degree(VertexId v) const { return parents[v].size(); }
  std::size_t out_degree(VertexId v) const { return children[v].size(); }
  bool is_leaf(VertexId v) const { return kind[v] == VertexKind::Leaf; }

  std::vector<VertexId> reticulations() const;
  std::size_t reticulation_count() const { return reticulations().size(); }

  /// Leaf labels in natural order.
  std::vector<std::string> leaf_labels() const;
};

using PhyloTree = PhyloNetwork;

/// One chosen in-edge per reticulation: reticulation -> chosen parent.
using BaseTreeChoice = std::map<VertexId, VertexId>;

struct Violation {
  std::string rule;    // stable rule id, e.g. "degree", "acyclic"
  std::string detail;  // offending vertex/edge description
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every network condition: single root of out-degree two, leaf and
/// internal degree signatures, declared kinds vs. degrees, label bijection,
/// acyclicity, no parallel edges. The single labeled vertex is valid.
/// Violations are data, not failures.
ValidationReport validate_network(const PhyloNetwork& net);

/// validate_network plus "no reticulations".
ValidationReport validate_tree(const PhyloNetwork& net);

/// Thrown when suppression would create a parallel edge (a malformed
/// embedding) or when structural preconditions fail.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Repeatedly replaces in-degree-1/out-degree-1 vertices by a parent->child
/// edge; a root with out-degree one is dropped and its child becomes the
/// root. Ids are re-densified in ascending order of the surviving vertices;
/// kinds are recomputed from degrees and leaf labels are preserved.
PhyloNetwork suppress_degree_two(const PhyloNetwork& net);

struct ResolveOutcome {
  bool ok = false;
  PhyloNetwork subgraph;  // spanning tree of the input when ok
  std::string error;      // "childless-vertex ..." or "disconnected ..." otherwise
};

/// Deletes the non-chosen in-edge of every reticulation. Succeeds only if
/// the result spans the network: every former out-degree-two vertex keeps a
/// child and every vertex stays reachable from the root.
ResolveOutcome resolve_choice(const PhyloNetwork& net, const BaseTreeChoice& choice);

/// True iff resolving `choice` yields a spanning tree whose suppression is
/// the tree `target`. Resolution failures yield false with `why` filled in.
bool verify_base_tree(const PhyloNetwork& net, const BaseTreeChoice& choice,
                      const PhyloTree& target, std::string* why = nullptr);

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exhaustive display check: tries all 2^r reticulation-edge choices,
/// pruning unreachable and dead-end branches before suppressing. Unlike a
/// base-tree check, the embedding need not span the network. Throws
/// CapExceededError when r exceeds `cap`.
bool displays_bruteforce(const PhyloNetwork& net, const PhyloTree& target,
                         unsigned cap = 16);

}  // namespace utbn
