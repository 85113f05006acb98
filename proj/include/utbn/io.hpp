#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "utbn/construct.hpp"
#include "utbn/graph.hpp"

namespace utbn {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string message, std::size_t pos)
      : std::runtime_error(std::move(message) + " at position " + std::to_string(pos)),
        position(pos) {}
};

/// Rooted binary Newick with labeled leaves, ';'-terminated. Non-binary
/// input, internal labels, branch lengths and stray characters are rejected
/// with the offending position.
PhyloTree parse_newick(const std::string& text);

/// Canonical Newick: children ordered by smallest descendant label
/// (numeric-aware). parse_newick(to_newick(t)) is t up to isomorphism.
std::string to_newick(const PhyloTree& tree);

/// Extended Newick: each reticulation appears exactly twice under one #Hk
/// tag, expanded at its first-built parent; k runs in coordinate order.
std::string to_enewick(const PhyloNetwork& net);

/// Deterministic DOT: tree edges solid, reticulation edges dashed, chosen
/// edges highlighted when a choice is given; vertices grouped by path
/// coordinate so layouts follow the construction's columns.
std::string to_dot(const PhyloNetwork& net, const std::vector<std::string>* coords = nullptr,
                   const BaseTreeChoice* choice = nullptr);

/// "utbn-graph/1" JSON: dense vertex ids in coordinate order, sorted edge
/// list, n and r metadata. The lossless interchange format.
std::string to_json_graph(const PhyloNetwork& net,
                          const std::vector<std::string>* coords = nullptr);

struct JsonGraph {
  PhyloNetwork net;
  std::vector<std::string> coords;  // empty strings when absent
};

JsonGraph from_json_graph(const std::string& text);

/// FNV-1a over the serialized graph; printed as 16 hex digits.
std::string fingerprint(const std::string& json_graph_text);

struct ChoiceEntry {
  std::string reticulation;  // coordinate
  std::string parent;        // coordinate
};

struct ChoiceFile {
  std::string fingerprint;
  std::vector<ChoiceEntry> entries;
};

std::string to_choice_json(const UniversalNet& u, const BaseTreeChoice& choice);

ChoiceFile parse_choice_json(const std::string& text);

/// Resolves coordinates against the network, rejecting a fingerprint
/// mismatch or unknown coordinates before any verification runs.
BaseTreeChoice bind_choice(const UniversalNet& u, const ChoiceFile& file);

}  // namespace utbn
