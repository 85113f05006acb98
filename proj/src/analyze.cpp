#include "utbn/analyze.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "utbn/bigint.hpp"
#include "utbn/treegen.hpp"

namespace utbn {

namespace {

struct UnionFind {
  std::vector<VertexId> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  VertexId find(VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(VertexId a, VertexId b) { parent[find(a)] = find(b); }
};

}  // namespace

TemporalResult temporal_labeling(const PhyloNetwork& net) {
  const std::size_t n = net.vertex_count();
  TemporalResult result;

  UnionFind uf(n);
  for (VertexId v = 0; v < n; ++v)
    if (net.kind[v] == VertexKind::Reticulation)
      for (VertexId p : net.parents[v]) uf.unite(p, v);

  // Strict constraints come from tree edges only.
  std::vector<std::pair<VertexId, VertexId>> strict;
  for (VertexId v = 0; v < n; ++v)
    if (net.kind[v] != VertexKind::Reticulation)
      for (VertexId p : net.parents[v]) strict.push_back({uf.find(p), uf.find(v)});

  std::vector<std::vector<VertexId>> out(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : strict) {
    out[a].push_back(b);
    ++indeg[b];
  }

  // Longest-path layering via Kahn; leftovers sit on a constraint cycle.
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (uf.find(v) == v && indeg[v] == 0) queue.push_back(v);
  std::size_t classes = 0, processed = 0;
  for (VertexId v = 0; v < n; ++v)
    if (uf.find(v) == v) ++classes;
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    ++processed;
    for (VertexId c : out[v]) {
      depth[c] = std::max(depth[c], depth[v] + 1);
      if (--indeg[c] == 0) queue.push_back(c);
    }
  }

  if (processed != classes) {
    // Every still-constrained class keeps an unprocessed predecessor, so a
    // backward walk must revisit a class; that loop is the witness.
    std::vector<VertexId> pred(n, kNoVertex);
    for (auto [a, b] : strict)
      if (indeg[b] > 0 && indeg[a] > 0) pred[b] = a;
    VertexId start = 0;
    for (VertexId v = 0; v < n; ++v)
      if (uf.find(v) == v && indeg[v] > 0) {
        start = v;
        break;
      }
    std::vector<VertexId> trail;
    std::vector<int> seen_at(n, -1);
    VertexId cur = start;
    while (seen_at[cur] < 0) {
      seen_at[cur] = static_cast<int>(trail.size());
      trail.push_back(cur);
      cur = pred[cur];
    }
    result.witness.assign(trail.begin() + seen_at[cur], trail.end());
    std::reverse(result.witness.begin(), result.witness.end());
    return result;
  }

  result.temporal = true;
  result.labels.resize(n);
  for (VertexId v = 0; v < n; ++v) result.labels[v] = depth[uf.find(v)];
  return result;
}

bool is_stack_free(const PhyloNetwork& net) {
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.kind[v] == VertexKind::Reticulation)
      for (VertexId c : net.children[v])
        if (net.kind[c] == VertexKind::Reticulation) return false;
  return true;
}

BoundReport bound_report(const UniversalNet& u) {
  BoundReport report;
  report.n = u.n;
  report.reticulations = u.reticulation_count;
  report.info_bound = count_trees(static_cast<unsigned>(u.n)).ceil_log2();
  report.ratio = u.n > 1
                     ? static_cast<double>(report.reticulations) / (u.n * std::log2(u.n))
                     : 0.0;
  return report;
}

bool scaffold_bound_holds(int n) {
  if (n < 2) return true;
  std::int64_t lhs = 0;
  for (int i = 2; i <= n; ++i) lhs += retic_slot_count(i);
  // n^n >= 2^(n*floor(log2 n)), so this integer bound is sufficient.
  const std::int64_t floor_log = std::bit_width(static_cast<unsigned>(n)) - 1;
  if (lhs <= n * floor_log) return true;
  return BigUint::pow2(static_cast<std::size_t>(lhs)) <=
         BigUint::pow(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n));
}

}  // namespace utbn
