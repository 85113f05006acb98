#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "utbn/benes.hpp"
#include "utbn/graph.hpp"

namespace utbn {

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// floor(log2(i/2)) + floor(log2((i+1)/2)): number of vertices subdividing
/// the pendant edge of leaf i. Exact bit arithmetic, no floating point.
int subdivision_count(int i);

/// floor(log2(i/2)): cross edges leaving path i toward path i-1.
int cross_out_count(int i);

/// floor(log2((i+1)/2)): reticulation slots (odd positions) on path i.
int retic_slot_count(int i);

/// Coordinate-addressed description of the top half: the caterpillar on
/// paths P_1..P_n with k_i new vertices on P_i, numbered from the spine, and
/// cross edges (i, j) running from the 2j-th new vertex on P_i to the
/// (2j-1)-th new vertex on P_{i-1}.
struct Scaffold {
  int n = 0;
  std::vector<int> slots;      // slots[i] = k_i, indices 1..n
  std::vector<int> cross_out;  // cross_out[i] = number of cross edges (i, *)

  bool has_cross(int i, int j) const {
    return i >= 2 && i <= n && j >= 1 && j <= cross_out[i];
  }
  /// Reticulation slots summed over all paths (P_n's unpaired ones included).
  std::int64_t retic_slot_total() const;
};

Scaffold build_top_scaffold(int n);

/// Rooted binary caterpillar (l_1, ..., l_n): the parents of leaves 1 and 2
/// coincide and the parent of leaf n is the root.
PhyloTree build_caterpillar(const std::vector<std::string>& labels);

/// A_n materialized as a digraph, leaves labeled by path index. Odd slots on
/// P_n have in- and out-degree one here, so this is not a valid network; it
/// is the coordinate-faithful structure the embedding recursion works on.
struct ScaffoldGraph {
  PhyloNetwork net;
  std::vector<VertexId> spine;             // spine[i] = q_i for 2 <= i <= n
  std::vector<std::vector<VertexId>> slot; // slot[i][s-1] = v_{i,s}
  std::vector<VertexId> leaf;              // leaf[i]
};

ScaffoldGraph scaffold_graph(const Scaffold& scaffold);

struct GadgetPair {
  VertexId tree_vertex = kNoVertex;
  VertexId retic = kNoVertex;
};

/// The bottom half standing alone: each wire is a path of switch gadgets
/// (tree vertex then reticulation, cross edges to the partner wire) ending
/// in a leaf. Wire heads have in-degree zero until spliced under A_n, so the
/// fragment is not a valid network by itself.
struct BottomGadget {
  int n = 0;
  BenesNet benes;
  PhyloNetwork net;
  std::vector<VertexId> head;  // head[i] = first vertex of wire i's path
  std::vector<VertexId> leaf;
  std::vector<std::array<GadgetPair, 2>> switch_vertices;  // [sid][0] on wire_lo

  std::size_t reticulation_count() const { return 2 * benes.switch_count(); }
};

BottomGadget build_bottom(int n);

/// U_n: scaffold paths spliced onto the corresponding wires of the bottom
/// gadget, with the degree-two slots on P_n suppressed. Every vertex carries
/// a stable coordinate (q{i}, v{i}.{s}, g{sid}.t{i}, g{sid}.r{i}, leaf{i});
/// choices and tests address vertices through these, not raw ids.
struct UniversalNet {
  int n = 0;
  PhyloNetwork net;
  Scaffold scaffold;
  BenesNet benes;
  std::vector<std::string> coord;                    // per vertex id
  std::unordered_map<std::string, VertexId> by_coord;
  std::vector<VertexId> spine;                       // q_i, 2 <= i <= n
  std::vector<std::vector<VertexId>> slot;           // kNoVertex where suppressed
  std::vector<std::array<GadgetPair, 2>> switch_vertices;
  std::vector<VertexId> leaf;                        // leaf[i]
  std::size_t reticulation_count = 0;
};

UniversalNet build_universal(int n);

/// The caterpillar route: every scaffold reticulation takes its in-path
/// parent and every switch sits straight.
BaseTreeChoice all_vertical_choice(const UniversalNet& u);

}  // namespace utbn
