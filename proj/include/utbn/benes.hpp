#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "utbn/graph.hpp"

namespace utbn {

/// Permutation on 0..n-1: perm[i] is the image of position i.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);

/// Whitespace-separated 1-based images, e.g. "4 1 3 2".
Permutation parse_permutation(const std::string& text);
std::string permutation_to_string(const Permutation& p);

enum class SwitchState : std::uint8_t { Straight, Crossed };

/// One setting per switch, indexed by switch id.
using SwitchSettings = std::vector<SwitchState>;

/// Rearrangeable switching network for any n, built recursively: an entry
/// column of floor(n/2) switches on wire pairs (1,2),(3,4),..., a subnetwork
/// of size ceil(n/2) on the odd wires, one of size floor(n/2) on the even
/// wires, and a mirror exit column. For odd n the last wire skips both
/// columns and runs straight into the larger (odd-wire) subnetwork as its
/// last port. Size 2 is a single switch, size 1 has no switches.
class BenesNet {
 public:
  struct Switch {
    int id;
    int wire_lo, wire_hi;  // 0-based wire indices, lo < hi
  };

  BenesNet() = default;  // empty network; build with BenesNet(n)
  explicit BenesNet(int n);

  int size() const { return n_; }
  const std::vector<Switch>& switches() const { return switches_; }
  std::size_t switch_count() const { return switches_.size(); }

  /// Switch ids met by wire w, in the order a signal traverses them.
  const std::vector<int>& switches_on_wire(int w) const { return on_wire_[w]; }

  /// Wire permutation realized by the settings.
  Permutation apply(const SwitchSettings& settings) const;

  /// Looping algorithm: settings with apply(result) == p. Each uncolored
  /// constraint loop starts at the lowest unassigned wire and is colored
  /// "upper" first; for odd sizes the bypass wire seeds its loop.
  SwitchSettings route(const Permutation& p) const;

 private:
  struct Node {
    std::vector<int> wires;  // physical wires of this subnetwork, ascending ports
    std::vector<int> entry;  // switch ids, entry[k] pairs wires[2k]/wires[2k+1]
    std::vector<int> exit;
    std::unique_ptr<Node> upper, lower;
    int single = -1;  // switch id for the size-2 base case
  };

  std::unique_ptr<Node> build(std::vector<int> wires);
  void collect_wire_order(const Node& node);
  void apply_node(const Node& node, const SwitchSettings& settings,
                  std::vector<int>& token_at_wire) const;
  void route_node(const Node& node, const Permutation& target, SwitchSettings& out) const;

  int n_ = 0;
  std::vector<Switch> switches_;
  std::vector<std::vector<int>> on_wire_;
  std::unique_ptr<Node> top_;
};

/// Switch count by the size recurrence alone, without building the network.
std::uint64_t benes_switch_count(std::uint64_t n);

}  // namespace utbn
