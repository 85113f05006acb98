#pragma once

#include <cstdint>
#include <vector>

#include "utbn/construct.hpp"
#include "utbn/graph.hpp"

namespace utbn {

/// Outcome of the temporal check. When `temporal`, labels[v] satisfies
/// t(u) < t(v) on every tree edge and t(u) = t(v) on every reticulation
/// edge. Otherwise witness holds vertices whose equality classes form a
/// cycle under the strict constraints (t(u) < ... < t(u)).
struct TemporalResult {
  bool temporal = false;
  std::vector<std::uint32_t> labels;
  std::vector<VertexId> witness;
};

/// Merges the endpoints of every reticulation edge (all in-edges of a
/// reticulation are reticulation edges), then layers the classes by longest
/// path in the strict digraph the tree edges induce.
TemporalResult temporal_labeling(const PhyloNetwork& net);

/// No reticulation is the parent of another reticulation.
bool is_stack_free(const PhyloNetwork& net);

struct BoundReport {
  int n = 0;
  std::size_t reticulations = 0;  // r(U_n)
  std::size_t info_bound = 0;     // ceil(log2 b_n); any network displaying all trees needs >= this
  double ratio = 0.0;             // r / (n log2 n)
};

BoundReport bound_report(const UniversalNet& u);

/// Exact check of the scaffold inequality: sum_{i=2..n} floor(log2((i+1)/2))
/// <= n log2 n. Integer-only on the fast path, big-integer comparison of
/// 2^lhs against n^n if it ever gets tight.
bool scaffold_bound_holds(int n);

}  // namespace utbn
