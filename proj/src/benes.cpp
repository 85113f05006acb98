#include "utbn/benes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace utbn {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation parse_permutation(const std::string& text) {
  std::istringstream in(text);
  Permutation p;
  long v;
  while (in >> v) p.push_back(static_cast<int>(v) - 1);
  if (!in.eof()) throw std::invalid_argument("permutation: expected whitespace-separated integers");
  if (!is_permutation(p))
    throw std::invalid_argument("permutation: images must be 1..n without repeats");
  return p;
}

std::string permutation_to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i] + 1);
  }
  return out;
}

BenesNet::BenesNet(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("BenesNet: size must be positive");
  std::vector<int> wires(n);
  for (int i = 0; i < n; ++i) wires[i] = i;
  top_ = build(std::move(wires));
  on_wire_.resize(n);
  collect_wire_order(*top_);
}

std::unique_ptr<BenesNet::Node> BenesNet::build(std::vector<int> wires) {
  auto node = std::make_unique<Node>();
  node->wires = std::move(wires);
  const int m = static_cast<int>(node->wires.size());
  if (m == 1) return node;
  if (m == 2) {
    node->single = static_cast<int>(switches_.size());
    switches_.push_back({node->single, node->wires[0], node->wires[1]});
    return node;
  }
  const int pairs = m / 2;
  for (int k = 0; k < pairs; ++k) {
    node->entry.push_back(static_cast<int>(switches_.size()));
    switches_.push_back({node->entry.back(), node->wires[2 * k], node->wires[2 * k + 1]});
  }
  // Odd wires carry the upper subnetwork so an odd-size bypass lands there
  // as the last port; even wires carry the lower one.
  std::vector<int> up, low;
  for (int i = 0; i < m; ++i) (i % 2 == 0 ? up : low).push_back(node->wires[i]);
  node->upper = build(std::move(up));
  node->lower = build(std::move(low));
  for (int k = 0; k < pairs; ++k) {
    node->exit.push_back(static_cast<int>(switches_.size()));
    switches_.push_back({node->exit.back(), node->wires[2 * k], node->wires[2 * k + 1]});
  }
  return node;
}

void BenesNet::collect_wire_order(const Node& node) {
  if (node.single >= 0) {
    on_wire_[node.wires[0]].push_back(node.single);
    on_wire_[node.wires[1]].push_back(node.single);
    return;
  }
  if (node.wires.size() < 2) return;
  for (std::size_t k = 0; k < node.entry.size(); ++k) {
    on_wire_[node.wires[2 * k]].push_back(node.entry[k]);
    on_wire_[node.wires[2 * k + 1]].push_back(node.entry[k]);
  }
  collect_wire_order(*node.upper);
  collect_wire_order(*node.lower);
  for (std::size_t k = 0; k < node.exit.size(); ++k) {
    on_wire_[node.wires[2 * k]].push_back(node.exit[k]);
    on_wire_[node.wires[2 * k + 1]].push_back(node.exit[k]);
  }
}

Permutation BenesNet::apply(const SwitchSettings& settings) const {
  if (settings.size() != switches_.size())
    throw std::invalid_argument("settings must cover every switch");
  std::vector<int> token_at_wire(n_);
  for (int w = 0; w < n_; ++w) token_at_wire[w] = w;
  apply_node(*top_, settings, token_at_wire);
  Permutation out(n_);
  for (int w = 0; w < n_; ++w) out[token_at_wire[w]] = w;
  return out;
}

void BenesNet::apply_node(const Node& node, const SwitchSettings& settings,
                          std::vector<int>& token_at_wire) const {
  if (node.single >= 0) {
    if (settings[node.single] == SwitchState::Crossed)
      std::swap(token_at_wire[node.wires[0]], token_at_wire[node.wires[1]]);
    return;
  }
  if (node.wires.size() < 2) return;
  for (std::size_t k = 0; k < node.entry.size(); ++k)
    if (settings[node.entry[k]] == SwitchState::Crossed)
      std::swap(token_at_wire[node.wires[2 * k]], token_at_wire[node.wires[2 * k + 1]]);
  apply_node(*node.upper, settings, token_at_wire);
  apply_node(*node.lower, settings, token_at_wire);
  for (std::size_t k = 0; k < node.exit.size(); ++k)
    if (settings[node.exit[k]] == SwitchState::Crossed)
      std::swap(token_at_wire[node.wires[2 * k]], token_at_wire[node.wires[2 * k + 1]]);
}

SwitchSettings BenesNet::route(const Permutation& p) const {
  if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  if (!is_permutation(p)) throw std::invalid_argument("route: not a permutation");
  SwitchSettings out(switches_.size(), SwitchState::Straight);
  route_node(*top_, p, out);
  return out;
}

namespace {
enum class Side : std::uint8_t { Unset, Upper, Lower };
Side flip(Side s) { return s == Side::Upper ? Side::Lower : Side::Upper; }
}  // namespace

void BenesNet::route_node(const Node& node, const Permutation& target,
                          SwitchSettings& out) const {
  const int m = static_cast<int>(node.wires.size());
  if (m == 1) return;
  if (m == 2) {
    out[node.single] = target[0] == 0 ? SwitchState::Straight : SwitchState::Crossed;
    return;
  }
  const int pairs = m / 2;
  Permutation inverse(m);
  for (int i = 0; i < m; ++i) inverse[target[i]] = i;

  // 2-color inputs and outputs: a token keeps its color through the middle,
  // switch mates take opposite colors.
  std::vector<Side> in_side(m, Side::Unset), out_side(m, Side::Unset);
  struct Item {
    bool is_input;
    int index;
    Side side;
  };
  std::vector<Item> work;
  auto push_in = [&](int i, Side s) { work.push_back({true, i, s}); };
  auto push_out = [&](int i, Side s) { work.push_back({false, i, s}); };
  auto drain = [&] {
    while (!work.empty()) {
      Item it = work.back();
      work.pop_back();
      auto& slot = it.is_input ? in_side[it.index] : out_side[it.index];
      if (slot != Side::Unset) {
        if (slot != it.side)
          throw std::logic_error("routing loop coloring conflict: network invariant broken");
        continue;
      }
      slot = it.side;
      if (it.is_input) {
        push_out(target[it.index], it.side);
        if (it.index < 2 * pairs) push_in(it.index ^ 1, flip(it.side));
      } else {
        push_in(inverse[it.index], it.side);
        if (it.index < 2 * pairs) push_out(it.index ^ 1, flip(it.side));
      }
    }
  };

  if (m % 2 == 1) {  // bypass wire is pinned to the upper subnetwork
    push_in(m - 1, Side::Upper);
    push_out(m - 1, Side::Upper);
    drain();
  }
  for (int i = 0; i < m; ++i)
    if (in_side[i] == Side::Unset) {
      push_in(i, Side::Upper);
      drain();
    }

  for (int k = 0; k < pairs; ++k) {
    out[node.entry[k]] =
        in_side[2 * k] == Side::Upper ? SwitchState::Straight : SwitchState::Crossed;
    out[node.exit[k]] =
        out_side[2 * k] == Side::Upper ? SwitchState::Straight : SwitchState::Crossed;
  }

  // Port k of a subnetwork sits between entry switch k and exit switch k;
  // an odd-size bypass occupies the last upper port on both ends.
  const int up_size = (m + 1) / 2;
  Permutation up_target(up_size), low_target(m / 2);
  for (int i = 0; i < m; ++i) {
    const int in_port = i / 2;   // == up_size-1 for the bypass wire
    const int out_port = target[i] / 2;
    if (in_side[i] == Side::Upper)
      up_target[in_port] = out_port;
    else
      low_target[in_port] = out_port;
  }
  route_node(*node.upper, up_target, out);
  route_node(*node.lower, low_target, out);
}

std::uint64_t benes_switch_count(std::uint64_t n) {
  if (n <= 1) return 0;
  if (n == 2) return 1;
  return benes_switch_count((n + 1) / 2) + benes_switch_count(n / 2) + 2 * (n / 2);
}

}  // namespace utbn
