#include "utbn/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "utbn/canonical.hpp"

namespace utbn {

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Root: return "root";
    case VertexKind::TreeVertex: return "tree";
    case VertexKind::Reticulation: return "reticulation";
    case VertexKind::Leaf: return "leaf";
  }
  return "?";
}

std::size_t PhyloNetwork::edge_count() const {
  std::size_t m = 0;
  for (const auto& c : children) m += c.size();
  return m;
}

VertexId PhyloNetwork::add_vertex(VertexKind k, std::string leaf_label) {
  VertexId id = static_cast<VertexId>(kind.size());
  kind.push_back(k);
  children.emplace_back();
  parents.emplace_back();
  label.push_back(std::move(leaf_label));
  return id;
}

void PhyloNetwork::add_edge(VertexId parent, VertexId child) {
  if (parent >= vertex_count() || child >= vertex_count())
    throw StructuralError("edge endpoint out of range");
  children[parent].push_back(child);
  parents[child].push_back(parent);
}

std::vector<VertexId> PhyloNetwork::reticulations() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (kind[v] == VertexKind::Reticulation) out.push_back(v);
  return out;
}

std::vector<std::string> PhyloNetwork::leaf_labels() const {
  std::vector<std::string> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (kind[v] == VertexKind::Leaf) out.push_back(label[v]);
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

namespace {

bool is_acyclic(const PhyloNetwork& net, std::string* cycle_at) {
  // Kahn's algorithm; leftover vertices lie on cycles.
  std::vector<std::size_t> indeg(net.vertex_count());
  for (VertexId v = 0; v < net.vertex_count(); ++v) indeg[v] = net.in_degree(v);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    ++seen;
    for (VertexId c : net.children[v])
      if (--indeg[c] == 0) queue.push_back(c);
  }
  if (seen == net.vertex_count()) return true;
  if (cycle_at) {
    for (VertexId v = 0; v < net.vertex_count(); ++v)
      if (indeg[v] > 0) {
        *cycle_at = "vertex " + std::to_string(v);
        break;
      }
  }
  return false;
}

}  // namespace

ValidationReport validate_network(const PhyloNetwork& net) {
  ValidationReport report;
  auto flag = [&](std::string rule, std::string detail) {
    report.violations.push_back({std::move(rule), std::move(detail)});
  };

  if (net.vertex_count() == 0) {
    flag("structure", "empty graph");
    return report;
  }
  if (net.root >= net.vertex_count()) {
    flag("structure", "root id out of range");
    return report;
  }

  // Single labeled vertex network.
  if (net.vertex_count() == 1) {
    if (net.edge_count() != 0) flag("structure", "single vertex with edges");
    if (net.kind[0] != VertexKind::Leaf || net.label[0].empty())
      flag("degree", "single vertex must be a labeled leaf");
    return report;
  }

  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const std::size_t din = net.in_degree(v), dout = net.out_degree(v);
    const char* who = to_string(net.kind[v]);
    switch (net.kind[v]) {
      case VertexKind::Root:
        if (v != net.root) flag("root", "vertex " + std::to_string(v) + " marked root but is not the root");
        if (din != 0 || dout != 2)
          flag("degree", std::string(who) + " " + std::to_string(v) + " has (in,out)=(" +
                             std::to_string(din) + "," + std::to_string(dout) + "), want (0,2)");
        break;
      case VertexKind::Leaf:
        if (din != 1 || dout != 0)
          flag("degree", std::string(who) + " " + std::to_string(v) + " has (in,out)=(" +
                             std::to_string(din) + "," + std::to_string(dout) + "), want (1,0)");
        if (net.label[v].empty()) flag("labels", "leaf " + std::to_string(v) + " unlabeled");
        break;
      case VertexKind::TreeVertex:
        if (din != 1 || dout != 2)
          flag("degree", std::string(who) + " " + std::to_string(v) + " has (in,out)=(" +
                             std::to_string(din) + "," + std::to_string(dout) + "), want (1,2)");
        break;
      case VertexKind::Reticulation:
        if (din != 2 || dout != 1)
          flag("degree", std::string(who) + " " + std::to_string(v) + " has (in,out)=(" +
                             std::to_string(din) + "," + std::to_string(dout) + "), want (2,1)");
        break;
    }
    if (net.kind[v] != VertexKind::Leaf && !net.label[v].empty())
      flag("labels", "non-leaf " + std::to_string(v) + " carries label");
    if (dout == 0 && net.kind[v] != VertexKind::Leaf)
      flag("degree", "out-degree-zero vertex " + std::to_string(v) + " not marked leaf");
  }

  if (net.kind[net.root] != VertexKind::Root)
    flag("root", "designated root has kind " + std::string(to_string(net.kind[net.root])));
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.in_degree(v) == 0 && v != net.root)
      flag("root", "second in-degree-zero vertex " + std::to_string(v));

  // Leaf labels form a bijection with X.
  std::set<std::string> seen;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (net.kind[v] != VertexKind::Leaf || net.label[v].empty()) continue;
    if (!seen.insert(net.label[v]).second)
      flag("labels", "duplicate leaf label \"" + net.label[v] + "\"");
  }

  std::set<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    for (VertexId c : net.children[v])
      if (!edges.insert({v, c}).second)
        flag("parallel-edges", "(" + std::to_string(v) + "," + std::to_string(c) + ")");

  std::string where;
  if (!is_acyclic(net, &where)) flag("acyclic", "cycle through " + where);

  return report;
}

ValidationReport validate_tree(const PhyloNetwork& net) {
  ValidationReport report = validate_network(net);
  for (VertexId v : net.reticulations())
    report.violations.push_back({"tree", "reticulation " + std::to_string(v)});
  return report;
}

PhyloNetwork suppress_degree_two(const PhyloNetwork& net) {
  const std::size_t n = net.vertex_count();
  std::vector<bool> removed(n, false);
  // Mutable adjacency copies; suppression is a local rewrite.
  auto children = net.children;
  auto parents = net.parents;
  VertexId root = net.root;

  auto has_edge = [&](VertexId u, VertexId v) {
    return std::find(children[u].begin(), children[u].end(), v) != children[u].end();
  };
  auto drop = [](std::vector<VertexId>& vec, VertexId x) {
    vec.erase(std::find(vec.begin(), vec.end(), x));
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (removed[v]) continue;
      if (v == root) {
        if (children[v].size() == 1 && parents[v].empty()) {
          VertexId c = children[v][0];
          drop(parents[c], v);
          children[v].clear();
          removed[v] = true;
          root = c;
          changed = true;
        }
        continue;
      }
      if (parents[v].size() == 1 && children[v].size() == 1) {
        VertexId p = parents[v][0], c = children[v][0];
        if (has_edge(p, c))
          throw StructuralError("suppressing vertex " + std::to_string(v) +
                                " would create a parallel edge (" + std::to_string(p) +
                                "," + std::to_string(c) + ")");
        // p -> v -> c becomes p -> c, keeping p's child slot in place.
        *std::find(children[p].begin(), children[p].end(), v) = c;
        *std::find(parents[c].begin(), parents[c].end(), v) = p;
        children[v].clear();
        parents[v].clear();
        removed[v] = true;
        changed = true;
      }
    }
  }

  PhyloNetwork out;
  std::vector<VertexId> remap(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (removed[v]) continue;
    VertexKind k;
    if (parents[v].empty() && !children[v].empty())
      k = VertexKind::Root;
    else if (children[v].empty())
      k = VertexKind::Leaf;
    else if (parents[v].size() == 2)
      k = VertexKind::Reticulation;
    else
      k = VertexKind::TreeVertex;
    if (children[v].empty() && parents[v].empty()) k = VertexKind::Leaf;  // single vertex
    remap[v] = out.add_vertex(k, net.label[v]);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (removed[v]) continue;
    for (VertexId c : children[v]) out.add_edge(remap[v], remap[c]);
  }
  out.root = remap[root];
  return out;
}

ResolveOutcome resolve_choice(const PhyloNetwork& net, const BaseTreeChoice& choice) {
  ResolveOutcome out;
  std::vector<VertexId> retics = net.reticulations();
  if (choice.size() != retics.size()) {
    out.error = "choice covers " + std::to_string(choice.size()) + " reticulations, network has " +
                std::to_string(retics.size());
    return out;
  }
  for (VertexId r : retics) {
    auto it = choice.find(r);
    if (it == choice.end()) {
      out.error = "no choice for reticulation " + std::to_string(r);
      return out;
    }
    const auto& ps = net.parents[r];
    if (std::find(ps.begin(), ps.end(), it->second) == ps.end()) {
      out.error = "chosen parent " + std::to_string(it->second) + " is not an in-neighbor of " +
                  std::to_string(r);
      return out;
    }
  }

  PhyloNetwork sub = net;
  for (auto [r, keep] : choice) {
    auto& ps = sub.parents[r];
    for (VertexId p : ps) {
      if (p == keep) continue;
      auto& cs = sub.children[p];
      cs.erase(std::find(cs.begin(), cs.end(), r));
    }
    ps.assign(1, keep);
  }

  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (net.out_degree(v) >= 2 && sub.out_degree(v) == 0) {
      out.error = "childless-vertex " + std::to_string(v);
      return out;
    }
  }

  std::vector<bool> reach(sub.vertex_count(), false);
  std::vector<VertexId> stack{sub.root};
  reach[sub.root] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId c : sub.children[v])
      if (!reach[c]) {
        reach[c] = true;
        stack.push_back(c);
      }
  }
  for (VertexId v = 0; v < sub.vertex_count(); ++v)
    if (!reach[v]) {
      out.error = "disconnected: vertex " + std::to_string(v) + " unreachable from root";
      return out;
    }

  out.ok = true;
  out.subgraph = std::move(sub);
  return out;
}

bool verify_base_tree(const PhyloNetwork& net, const BaseTreeChoice& choice,
                      const PhyloTree& target, std::string* why) {
  ResolveOutcome rc = resolve_choice(net, choice);
  if (!rc.ok) {
    if (why) *why = rc.error;
    return false;
  }
  PhyloTree suppressed;
  try {
    suppressed = suppress_degree_two(rc.subgraph);
  } catch (const StructuralError& e) {
    if (why) *why = e.what();
    return false;
  }
  if (!tree_equal(suppressed, target)) {
    if (why) *why = "resolved tree differs from target";
    return false;
  }
  return true;
}

namespace {

/// Display candidate for one in-edge choice: restrict to the root-reachable
/// part, prune unlabeled dead ends, suppress, compare.
bool choice_displays(const PhyloNetwork& net, const std::vector<VertexId>& retics,
                     std::uint64_t mask, const std::string& target_enc,
                     std::size_t want_leaves) {
  PhyloNetwork sub = net;
  for (std::size_t b = 0; b < retics.size(); ++b) {
    VertexId r = retics[b];
    VertexId keep = net.parents[r][(mask >> b) & 1u];
    auto& ps = sub.parents[r];
    for (VertexId p : ps) {
      if (p == keep) continue;
      auto& cs = sub.children[p];
      cs.erase(std::find(cs.begin(), cs.end(), r));
    }
    ps.assign(1, keep);
  }

  std::vector<bool> alive(sub.vertex_count(), false);
  std::vector<VertexId> stack{sub.root};
  alive[sub.root] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId c : sub.children[v])
      if (!alive[c]) {
        alive[c] = true;
        stack.push_back(c);
      }
  }
  std::size_t live_leaves = 0;
  for (VertexId v = 0; v < sub.vertex_count(); ++v)
    if (alive[v] && sub.kind[v] == VertexKind::Leaf) ++live_leaves;
  if (live_leaves != want_leaves) return false;

  // Drop unreachable vertices and iteratively prune unlabeled dead ends.
  std::vector<std::size_t> out_live(sub.vertex_count(), 0);
  for (VertexId v = 0; v < sub.vertex_count(); ++v) {
    if (!alive[v]) continue;
    for (VertexId c : sub.children[v])
      if (alive[c]) ++out_live[v];
  }
  std::vector<VertexId> dead;
  for (VertexId v = 0; v < sub.vertex_count(); ++v)
    if (alive[v] && out_live[v] == 0 && sub.kind[v] != VertexKind::Leaf) dead.push_back(v);
  while (!dead.empty()) {
    VertexId v = dead.back();
    dead.pop_back();
    alive[v] = false;
    for (VertexId p : sub.parents[v]) {
      if (!alive[p]) continue;
      if (--out_live[p] == 0 && sub.kind[p] != VertexKind::Leaf) dead.push_back(p);
    }
  }

  PhyloNetwork pruned;
  std::vector<VertexId> remap(sub.vertex_count(), 0);
  for (VertexId v = 0; v < sub.vertex_count(); ++v)
    if (alive[v]) remap[v] = pruned.add_vertex(sub.kind[v], sub.label[v]);
  for (VertexId v = 0; v < sub.vertex_count(); ++v) {
    if (!alive[v]) continue;
    for (VertexId c : sub.children[v])
      if (alive[c]) pruned.add_edge(remap[v], remap[c]);
  }
  if (!alive[sub.root]) return false;
  pruned.root = remap[sub.root];

  PhyloTree tree;
  try {
    tree = suppress_degree_two(pruned);
  } catch (const StructuralError&) {
    return false;
  }
  for (VertexId v = 0; v < tree.vertex_count(); ++v)
    if (tree.kind[v] == VertexKind::Reticulation) return false;
  return canonical_encoding(tree) == target_enc;
}

}  // namespace

bool displays_bruteforce(const PhyloNetwork& net, const PhyloTree& target, unsigned cap) {
  std::vector<VertexId> retics = net.reticulations();
  if (retics.size() > cap)
    throw CapExceededError("network has " + std::to_string(retics.size()) +
                           " reticulations, cap is " + std::to_string(cap));
  const std::string target_enc = canonical_encoding(target);
  std::size_t want_leaves = 0;
  for (VertexId v = 0; v < target.vertex_count(); ++v)
    if (target.kind[v] == VertexKind::Leaf) ++want_leaves;
  const std::uint64_t total = std::uint64_t{1} << retics.size();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (choice_displays(net, retics, mask, target_enc, want_leaves)) return true;
  return false;
}

}  // namespace utbn
