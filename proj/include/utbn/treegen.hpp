#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "utbn/bigint.hpp"
#include "utbn/graph.hpp"

namespace utbn {

/// Number of rooted binary phylogenetic trees on n labeled leaves:
/// 1 x 3 x 5 x ... x (2n-3), with b_1 = b_2 = 1.
BigUint count_trees(unsigned n);

/// Same count as a machine word; valid for n <= 18, throws beyond.
std::uint64_t count_trees_u64(unsigned n);

/// Enumerates every tree on the given labels exactly once, by inserting the
/// labels in ascending natural order: the k-th leaf can attach to any of the
/// 2k-3 edges of the partial tree (root edge included), so trees correspond
/// one-to-one to mixed-radix codes and carry a stable index.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(std::vector<std::string> labels);

  std::uint64_t size() const { return size_; }
  PhyloTree tree_at(std::uint64_t index) const;

  /// Calls fn for each tree with index in [begin, end); end == size().
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(std::uint64_t, const PhyloTree&)>& fn) const;

 private:
  std::vector<std::string> labels_;  // ascending
  std::uint64_t size_ = 1;
};

/// Uniform random tree on the labels: at each insertion step the attachment
/// edge is drawn uniformly. Deterministic per seed.
PhyloTree random_tree(std::vector<std::string> labels, std::uint64_t seed);

}  // namespace utbn
