#include "utbn/construct.hpp"

#include <bit>
#include <stdexcept>

namespace utbn {

namespace {

int bit_length(unsigned x) { return static_cast<int>(std::bit_width(x)); }

}  // namespace

int subdivision_count(int i) {
  if (i < 2) throw std::invalid_argument("subdivision_count: i >= 2 required");
  return cross_out_count(i) + retic_slot_count(i);
}

int cross_out_count(int i) {
  if (i < 2) return 0;
  return bit_length(static_cast<unsigned>(i)) - 2;  // floor(log2(i/2))
}

int retic_slot_count(int i) {
  if (i < 2) return 0;
  return bit_length(static_cast<unsigned>(i + 1)) - 2;  // floor(log2((i+1)/2))
}

std::int64_t Scaffold::retic_slot_total() const {
  std::int64_t total = 0;
  for (int i = 2; i <= n; ++i) total += retic_slot_count(i);
  return total;
}

Scaffold build_top_scaffold(int n) {
  if (n < 1) throw std::invalid_argument("build_top_scaffold: n >= 1 required");
  Scaffold s;
  s.n = n;
  s.slots.assign(n + 1, 0);
  s.cross_out.assign(n + 1, 0);
  for (int i = 2; i <= n; ++i) {
    s.slots[i] = subdivision_count(i);
    s.cross_out[i] = cross_out_count(i);
    // Every cross edge (i, j) must find its endpoints: source 2j on P_i,
    // target 2j-1 on P_{i-1}.
    for (int j = 1; j <= s.cross_out[i]; ++j) {
      if (2 * j > s.slots[i] || 2 * j - 1 > s.slots[i - 1])
        throw std::logic_error("cross edge (" + std::to_string(i) + "," + std::to_string(j) +
                               ") has a missing endpoint");
    }
    // Conversely every odd slot below path n has an incoming cross edge.
    if (i < n && retic_slot_count(i) != cross_out_count(i + 1))
      throw std::logic_error("slot/cross mismatch between paths " + std::to_string(i) +
                             " and " + std::to_string(i + 1));
  }
  return s;
}

PhyloTree build_caterpillar(const std::vector<std::string>& labels) {
  if (labels.empty()) throw std::invalid_argument("build_caterpillar: no labels");
  PhyloTree t;
  const int n = static_cast<int>(labels.size());
  if (n == 1) {
    t.root = t.add_vertex(VertexKind::Leaf, labels[0]);
    return t;
  }
  // Spine q_n .. q_2 from the root down, then each leaf hangs off its q_i.
  std::vector<VertexId> spine(n + 1, kNoVertex);
  for (int i = n; i >= 2; --i)
    spine[i] = t.add_vertex(i == n ? VertexKind::Root : VertexKind::TreeVertex);
  for (int i = n; i > 2; --i) t.add_edge(spine[i], spine[i - 1]);
  std::vector<VertexId> leaf(n + 1);
  for (int i = 1; i <= n; ++i) leaf[i] = t.add_vertex(VertexKind::Leaf, labels[i - 1]);
  t.add_edge(spine[2], leaf[1]);
  for (int i = 2; i <= n; ++i) t.add_edge(spine[i], leaf[i]);
  t.root = spine[n];
  return t;
}

ScaffoldGraph scaffold_graph(const Scaffold& scaffold) {
  const int n = scaffold.n;
  ScaffoldGraph g;
  g.spine.assign(n + 1, kNoVertex);
  g.slot.assign(n + 1, {});
  g.leaf.assign(n + 1, kNoVertex);
  if (n == 1) {
    g.leaf[1] = g.net.add_vertex(VertexKind::Leaf, "1");
    g.net.root = g.leaf[1];
    return g;
  }
  for (int i = n; i >= 2; --i)
    g.spine[i] = g.net.add_vertex(i == n ? VertexKind::Root : VertexKind::TreeVertex);
  for (int i = 1; i <= n; ++i) {
    g.slot[i].assign(scaffold.slots[i], kNoVertex);
    for (int s = 1; s <= scaffold.slots[i]; ++s) {
      // Odd positions are reticulation slots; on P_n they never receive a
      // cross edge and stay pass-through vertices.
      VertexKind kind = (s % 2 == 1 && i < n) ? VertexKind::Reticulation : VertexKind::TreeVertex;
      g.slot[i][s - 1] = g.net.add_vertex(kind);
    }
    g.leaf[i] = g.net.add_vertex(VertexKind::Leaf, std::to_string(i));
  }
  for (int i = n; i > 2; --i) g.net.add_edge(g.spine[i], g.spine[i - 1]);
  for (int i = 1; i <= n; ++i) {
    VertexId prev = g.spine[i == 1 ? 2 : i];
    for (int s = 1; s <= scaffold.slots[i]; ++s) {
      g.net.add_edge(prev, g.slot[i][s - 1]);
      prev = g.slot[i][s - 1];
    }
    g.net.add_edge(prev, g.leaf[i]);
  }
  for (int i = 3; i <= n; ++i)
    for (int j = 1; j <= scaffold.cross_out[i]; ++j)
      g.net.add_edge(g.slot[i][2 * j - 1], g.slot[i - 1][2 * j - 2]);
  g.net.root = g.spine[n];
  return g;
}

namespace {

/// Lays the switch gadgets onto every wire of `net`: per switch a tree
/// vertex then a reticulation on both wires, then the crossover edges.
/// tail[i] is the vertex each wire hangs from (kNoVertex to start a fresh
/// chain, as in the standalone bottom gadget). Leaves finish each wire.
struct GadgetLayout {
  std::vector<VertexId> head;
  std::vector<VertexId> leaf;
  std::vector<std::array<GadgetPair, 2>> switch_vertices;
};

GadgetLayout lay_gadgets(PhyloNetwork& net, const BenesNet& benes, std::vector<VertexId> tail,
                         std::vector<std::string>* coords,
                         std::unordered_map<std::string, VertexId>* by_coord) {
  const int n = benes.size();
  GadgetLayout out;
  out.head.assign(n + 1, kNoVertex);
  out.leaf.assign(n + 1, kNoVertex);
  out.switch_vertices.assign(benes.switch_count(), {});
  auto add = [&](VertexKind kind, const std::string& coord, std::string label = {}) {
    VertexId v = net.add_vertex(kind, std::move(label));
    if (coords) {
      coords->push_back(coord);
      (*by_coord)[coord] = v;
    }
    return v;
  };
  for (int i = 1; i <= n; ++i) {
    VertexId prev = tail[i];
    for (int sid : benes.switches_on_wire(i - 1)) {
      GadgetPair pair;
      pair.tree_vertex =
          add(VertexKind::TreeVertex, "g" + std::to_string(sid) + ".t" + std::to_string(i));
      pair.retic =
          add(VertexKind::Reticulation, "g" + std::to_string(sid) + ".r" + std::to_string(i));
      if (prev == kNoVertex)
        out.head[i] = pair.tree_vertex;
      else
        net.add_edge(prev, pair.tree_vertex);
      net.add_edge(pair.tree_vertex, pair.retic);
      prev = pair.retic;
      const int side = benes.switches()[sid].wire_lo == i - 1 ? 0 : 1;
      out.switch_vertices[sid][side] = pair;
    }
    out.leaf[i] = add(VertexKind::Leaf, "leaf" + std::to_string(i), std::to_string(i));
    if (prev == kNoVertex)
      out.head[i] = out.leaf[i];
    else
      net.add_edge(prev, out.leaf[i]);
  }
  for (const auto& sw : benes.switches()) {
    const auto& lo = out.switch_vertices[sw.id][0];
    const auto& hi = out.switch_vertices[sw.id][1];
    net.add_edge(lo.tree_vertex, hi.retic);
    net.add_edge(hi.tree_vertex, lo.retic);
  }
  return out;
}

}  // namespace

BottomGadget build_bottom(int n) {
  if (n < 1) throw std::invalid_argument("build_bottom: n >= 1 required");
  BottomGadget b{n, BenesNet(n), {}, {}, {}, {}};
  GadgetLayout layout =
      lay_gadgets(b.net, b.benes, std::vector<VertexId>(n + 1, kNoVertex), nullptr, nullptr);
  b.head = std::move(layout.head);
  b.leaf = std::move(layout.leaf);
  b.switch_vertices = std::move(layout.switch_vertices);
  b.net.root = b.head[1];
  return b;
}

UniversalNet build_universal(int n) {
  if (n < 1) throw std::invalid_argument("build_universal: n >= 1 required");
  UniversalNet u;
  u.n = n;
  u.scaffold = build_top_scaffold(n);
  u.benes = BenesNet(n);
  u.spine.assign(n + 1, kNoVertex);
  u.slot.assign(n + 1, {});
  u.leaf.assign(n + 1, kNoVertex);

  if (n == 1) {
    u.leaf[1] = u.net.add_vertex(VertexKind::Leaf, "1");
    u.net.root = u.leaf[1];
    u.coord.push_back("leaf1");
    u.by_coord["leaf1"] = u.leaf[1];
    return u;
  }

  auto add = [&](VertexKind kind, const std::string& coord) {
    VertexId v = u.net.add_vertex(kind);
    u.coord.push_back(coord);
    u.by_coord[coord] = v;
    return v;
  };

  for (int i = n; i >= 2; --i)
    u.spine[i] = add(i == n ? VertexKind::Root : VertexKind::TreeVertex, "q" + std::to_string(i));

  // Scaffold slots; P_n's odd ones are degree-two in U_n and stay out.
  std::vector<VertexId> tail(n + 1, kNoVertex);
  for (int i = 1; i <= n; ++i) {
    u.slot[i].assign(u.scaffold.slots[i], kNoVertex);
    VertexId prev = u.spine[i == 1 ? 2 : i];
    for (int s = 1; s <= u.scaffold.slots[i]; ++s) {
      if (i == n && s % 2 == 1) continue;
      VertexKind kind = (s % 2 == 1) ? VertexKind::Reticulation : VertexKind::TreeVertex;
      u.slot[i][s - 1] = add(kind, "v" + std::to_string(i) + "." + std::to_string(s));
      u.net.add_edge(prev, u.slot[i][s - 1]);
      prev = u.slot[i][s - 1];
    }
    tail[i] = prev;
  }

  GadgetLayout layout = lay_gadgets(u.net, u.benes, tail, &u.coord, &u.by_coord);
  u.leaf = std::move(layout.leaf);
  u.switch_vertices = std::move(layout.switch_vertices);

  for (int i = n; i > 2; --i) u.net.add_edge(u.spine[i], u.spine[i - 1]);
  for (int i = 3; i <= n; ++i)
    for (int j = 1; j <= u.scaffold.cross_out[i]; ++j)
      u.net.add_edge(u.slot[i][2 * j - 1], u.slot[i - 1][2 * j - 2]);
  u.net.root = u.spine[n];

  u.reticulation_count = u.net.reticulation_count();
  std::size_t expected = 2 * u.benes.switch_count();
  for (int i = 2; i <= n - 1; ++i) expected += retic_slot_count(i);
  if (u.reticulation_count != expected)
    throw std::logic_error("U_" + std::to_string(n) + " reticulation count " +
                           std::to_string(u.reticulation_count) + " != expected " +
                           std::to_string(expected));
  return u;
}

BaseTreeChoice all_vertical_choice(const UniversalNet& u) {
  BaseTreeChoice choice;
  for (int i = 2; i <= u.n - 1; ++i)
    for (int s = 1; s <= u.scaffold.slots[i]; s += 2)
      choice[u.slot[i][s - 1]] = s == 1 ? u.spine[i] : u.slot[i][s - 2];
  for (const auto& sw : u.benes.switches())
    for (int side = 0; side < 2; ++side) {
      const auto& pair = u.switch_vertices[sw.id][side];
      choice[pair.retic] = pair.tree_vertex;
    }
  return choice;
}

}  // namespace utbn
