#include "utbn/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "utbn/canonical.hpp"

namespace utbn {

namespace {

using nlohmann::json;

bool label_char(char c) {
  return c != '(' && c != ')' && c != ',' && c != ';' && c != ':' &&
         !std::isspace(static_cast<unsigned char>(c));
}

struct NewickParser {
  const std::string& text;
  std::size_t pos = 0;
  PhyloTree tree;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos); }

  char peek() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }

  VertexId parse_node(bool is_root) {
    if (peek() == '(') {
      ++pos;  // '('
      VertexId node = tree.add_vertex(is_root ? VertexKind::Root : VertexKind::TreeVertex);
      VertexId first = parse_node(false);
      if (peek() != ',') fail("expected ','");
      ++pos;
      VertexId second = parse_node(false);
      if (peek() == ',') fail("non-binary vertex");
      if (peek() != ')') fail("expected ')'");
      ++pos;
      skip_space();
      if (pos < text.size() && label_char(text[pos])) fail("internal labels not supported");
      if (pos < text.size() && text[pos] == ':') fail("branch lengths not supported");
      tree.add_edge(node, first);
      tree.add_edge(node, second);
      return node;
    }
    std::size_t start = pos;
    while (pos < text.size() && label_char(text[pos])) ++pos;
    if (pos == start) fail("expected leaf label or '('");
    return tree.add_vertex(VertexKind::Leaf, text.substr(start, pos - start));
  }
};

}  // namespace

PhyloTree parse_newick(const std::string& text) {
  NewickParser parser{text};
  parser.tree.root = parser.parse_node(true);
  if (parser.peek() != ';') parser.fail("expected ';'");
  ++parser.pos;
  parser.skip_space();
  if (parser.pos != text.size()) parser.fail("trailing input after ';'");
  return parser.tree;
}

namespace {

// Smallest descendant label per vertex, used as the canonical child order.
std::vector<std::string> min_labels(const PhyloNetwork& net) {
  std::vector<std::string> out(net.vertex_count());
  // Vertices in reverse topological order via repeated passes (graphs here
  // are small); children are built after parents in our constructions, so a
  // reverse id sweep settles in one pass for trees and few for networks.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = net.vertex_count(); v-- > 0;) {
      std::string best = net.kind[v] == VertexKind::Leaf ? net.label[v] : std::string();
      for (VertexId c : net.children[v]) {
        if (out[c].empty()) continue;
        if (best.empty() || natural_less(out[c], best)) best = out[c];
      }
      if (!best.empty() && best != out[v]) {
        out[v] = best;
        changed = true;
      }
    }
  }
  return out;
}

void write_newick(const PhyloTree& tree, VertexId v, const std::vector<std::string>& mins,
                  std::string& out) {
  if (tree.kind[v] == VertexKind::Leaf) {
    out += tree.label[v];
    return;
  }
  VertexId a = tree.children[v][0], b = tree.children[v][1];
  if (natural_less(mins[b], mins[a])) std::swap(a, b);
  out += '(';
  write_newick(tree, a, mins, out);
  out += ',';
  write_newick(tree, b, mins, out);
  out += ')';
}

}  // namespace

std::string to_newick(const PhyloTree& tree) {
  std::string out;
  write_newick(tree, tree.root, min_labels(tree), out);
  out += ';';
  return out;
}

namespace {

struct ENewickWriter {
  const PhyloNetwork& net;
  std::vector<int> hybrid_tag;   // per vertex, -1 if not a reticulation
  std::vector<bool> expanded;

  void write(VertexId v, std::string& out) {
    if (net.kind[v] == VertexKind::Reticulation) {
      const std::string tag = "#H" + std::to_string(hybrid_tag[v]);
      if (expanded[v]) {
        out += tag;
        return;
      }
      expanded[v] = true;
      out += '(';
      write(net.children[v][0], out);
      out += ')';
      out += tag;
      return;
    }
    if (net.kind[v] == VertexKind::Leaf) {
      out += net.label[v];
      return;
    }
    out += '(';
    for (std::size_t i = 0; i < net.children[v].size(); ++i) {
      if (i) out += ',';
      write(net.children[v][i], out);
    }
    out += ')';
  }
};

}  // namespace

std::string to_enewick(const PhyloNetwork& net) {
  ENewickWriter writer{net, std::vector<int>(net.vertex_count(), -1),
                       std::vector<bool>(net.vertex_count(), false)};
  int next = 1;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.kind[v] == VertexKind::Reticulation) writer.hybrid_tag[v] = next++;
  std::string out;
  writer.write(net.root, out);
  out += ';';
  return out;
}

namespace {

std::string dot_name(VertexId v, const std::vector<std::string>* coords) {
  if (coords && v < coords->size() && !(*coords)[v].empty()) return (*coords)[v];
  return "n" + std::to_string(v);
}

std::string path_group(const std::string& coord) {
  // v{i}.{s}, g{k}.t{i}, g{k}.r{i} and leaf{i} all live on path i.
  if (coord.empty()) return {};
  if (coord[0] == 'q') return "spine";
  if (coord.rfind("leaf", 0) == 0) return "p" + coord.substr(4);
  if (coord[0] == 'v') {
    auto dot = coord.find('.');
    return "p" + coord.substr(1, dot - 1);
  }
  if (coord[0] == 'g') {
    auto t = coord.find_last_of("tr");
    return "p" + coord.substr(t + 1);
  }
  return {};
}

}  // namespace

std::string to_dot(const PhyloNetwork& net, const std::vector<std::string>* coords,
                   const BaseTreeChoice* choice) {
  std::ostringstream out;
  out << "digraph utbn {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=circle, width=0.25, fixedsize=true, fontsize=9];\n";
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    out << "  \"" << dot_name(v, coords) << "\" [";
    switch (net.kind[v]) {
      case VertexKind::Leaf:
        out << "shape=box, label=\"" << net.label[v] << "\"";
        break;
      case VertexKind::Reticulation:
        out << "style=filled, fillcolor=gray80, label=\"\"";
        break;
      case VertexKind::Root:
        out << "label=\"\", xlabel=\"root\"";
        break;
      case VertexKind::TreeVertex:
        out << "label=\"\"";
        break;
    }
    if (coords) {
      std::string group = path_group((*coords)[v]);
      if (!group.empty()) out << ", group=\"" << group << "\"";
    }
    out << "];\n";
  }
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    for (VertexId c : net.children[v]) {
      out << "  \"" << dot_name(v, coords) << "\" -> \"" << dot_name(c, coords) << "\"";
      std::vector<std::string> attrs;
      if (net.kind[c] == VertexKind::Reticulation) attrs.push_back("style=dashed");
      if (choice) {
        auto it = choice->find(c);
        if (it != choice->end() && it->second == v) attrs.push_back("color=\"#1b6f2a\", penwidth=2");
      }
      if (!attrs.empty()) {
        out << " [" << attrs[0];
        for (std::size_t i = 1; i < attrs.size(); ++i) out << ", " << attrs[i];
        out << "]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json_graph(const PhyloNetwork& net, const std::vector<std::string>* coords) {
  json doc;
  doc["format"] = "utbn-graph/1";
  json vertices = json::array();
  std::size_t r = 0;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    json entry;
    entry["id"] = v;
    entry["kind"] = to_string(net.kind[v]);
    if (net.kind[v] == VertexKind::Leaf) entry["label"] = net.label[v];
    if (coords && !(*coords)[v].empty()) entry["coord"] = (*coords)[v];
    if (net.kind[v] == VertexKind::Reticulation) ++r;
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    for (VertexId c : net.children[v]) edges.push_back({v, c});
  std::sort(edges.begin(), edges.end());
  json edge_list = json::array();
  for (auto [a, b] : edges) edge_list.push_back(json::array({a, b}));
  doc["edges"] = std::move(edge_list);
  doc["root"] = net.root;
  doc["metadata"]["n"] = net.leaf_labels().size();
  doc["metadata"]["r"] = r;
  return doc.dump(2) + "\n";
}

JsonGraph from_json_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.contains("format") || doc["format"] != "utbn-graph/1")
    throw ParseError("missing or unsupported format tag", 0);
  JsonGraph out;
  const auto& vertices = doc.at("vertices");
  out.coords.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& entry = vertices[i];
    if (entry.at("id").get<std::size_t>() != i)
      throw ParseError("vertex ids must be dense and ascending", i);
    const std::string kind = entry.at("kind").get<std::string>();
    VertexKind k;
    if (kind == "root")
      k = VertexKind::Root;
    else if (kind == "leaf")
      k = VertexKind::Leaf;
    else if (kind == "tree")
      k = VertexKind::TreeVertex;
    else if (kind == "reticulation")
      k = VertexKind::Reticulation;
    else
      throw ParseError("unknown vertex kind \"" + kind + "\"", i);
    std::string label = entry.contains("label") ? entry["label"].get<std::string>() : "";
    out.net.add_vertex(k, std::move(label));
    if (entry.contains("coord")) out.coords[i] = entry["coord"].get<std::string>();
  }
  for (const auto& edge : doc.at("edges"))
    out.net.add_edge(edge.at(0).get<VertexId>(), edge.at(1).get<VertexId>());
  out.net.root = doc.at("root").get<VertexId>();
  if (out.net.root >= out.net.vertex_count()) throw ParseError("root id out of range", 0);
  return out;
}

std::string fingerprint(const std::string& json_graph_text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : json_graph_text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::string to_choice_json(const UniversalNet& u, const BaseTreeChoice& choice) {
  json doc;
  doc["format"] = "utbn-choice/1";
  doc["fingerprint"] = fingerprint(to_json_graph(u.net, &u.coord));
  json entries = json::array();
  for (auto [retic, parent] : choice) {
    json entry;
    entry["reticulation"] = u.coord[retic];
    entry["parent"] = u.coord[parent];
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

ChoiceFile parse_choice_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.contains("format") || doc["format"] != "utbn-choice/1")
    throw ParseError("missing or unsupported format tag", 0);
  ChoiceFile file;
  file.fingerprint = doc.at("fingerprint").get<std::string>();
  for (const auto& entry : doc.at("entries"))
    file.entries.push_back({entry.at("reticulation").get<std::string>(),
                            entry.at("parent").get<std::string>()});
  return file;
}

BaseTreeChoice bind_choice(const UniversalNet& u, const ChoiceFile& file) {
  const std::string expect = fingerprint(to_json_graph(u.net, &u.coord));
  if (file.fingerprint != expect)
    throw std::invalid_argument("choice fingerprint " + file.fingerprint +
                                " does not match network " + expect);
  BaseTreeChoice choice;
  for (const auto& entry : file.entries) {
    auto r = u.by_coord.find(entry.reticulation);
    auto p = u.by_coord.find(entry.parent);
    if (r == u.by_coord.end())
      throw std::invalid_argument("unknown coordinate \"" + entry.reticulation + "\"");
    if (p == u.by_coord.end())
      throw std::invalid_argument("unknown coordinate \"" + entry.parent + "\"");
    choice[r->second] = p->second;
  }
  return choice;
}

}  // namespace utbn
