#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "utbn/analyze.hpp"
#include "utbn/bigint.hpp"
#include "utbn/construct.hpp"

using namespace utbn;

namespace {

/// Re-checks returned labels edge by edge, independent of how they were
/// computed.
bool labels_consistent(const PhyloNetwork& net, const std::vector<std::uint32_t>& t) {
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    for (VertexId c : net.children[v]) {
      if (net.kind[c] == VertexKind::Reticulation) {
        if (t[v] != t[c]) return false;
      } else {
        if (t[v] >= t[c]) return false;
      }
    }
  return true;
}

/// Exhaustive oracle: tries every assignment V -> {0..V-1}.
bool temporal_exists_bruteforce(const PhyloNetwork& net) {
  const std::size_t n = net.vertex_count();
  std::vector<std::uint32_t> t(n, 0);
  while (true) {
    if (labels_consistent(net, t)) return true;
    std::size_t i = 0;
    while (i < n && t[i] + 1 == n) t[i++] = 0;
    if (i == n) return false;
    ++t[i];
  }
}

}  // namespace

TEST_CASE("trees are temporal via depth labels") {
  PhyloTree t = build_caterpillar(test::labels_1_to(6));
  TemporalResult result = temporal_labeling(t);
  REQUIRE(result.temporal);
  CHECK(labels_consistent(t, result.labels));
}

TEST_CASE("universal networks are temporal and stack-free (samples)") {
  for (int n : {2, 4, 7, 16, 33}) {
    UniversalNet u = build_universal(n);
    TemporalResult result = temporal_labeling(u.net);
    INFO("n = ", n);
    REQUIRE(result.temporal);
    CHECK(labels_consistent(u.net, result.labels));
    CHECK(is_stack_free(u.net));
  }
}

TEST_CASE("a reticulation bridging a tree path is not temporal") {
  PhyloNetwork net = test::untimeable_network();
  REQUIRE(validate_network(net).ok());
  TemporalResult result = temporal_labeling(net);
  CHECK_FALSE(result.temporal);
  CHECK_FALSE(result.witness.empty());
  // The exhaustive search over all 7^7 assignments agrees.
  CHECK_FALSE(temporal_exists_bruteforce(net));
}

TEST_CASE("stack-free is false exactly on reticulation chains") {
  PhyloNetwork net = test::stacked_network();
  REQUIRE(validate_network(net).ok());
  CHECK_FALSE(is_stack_free(net));
  CHECK(is_stack_free(build_caterpillar(test::labels_1_to(4))));
}

TEST_CASE("bound report spot values") {
  BoundReport r4 = bound_report(build_universal(4));
  CHECK(r4.info_bound == 4);  // ceil(log2 15)
  CHECK(r4.reticulations == 13);

  BoundReport r7 = bound_report(build_universal(7));
  CHECK(r7.info_bound == 14);  // ceil(log2 10395)
  CHECK(r7.reticulations == 34);

  BoundReport r1 = bound_report(build_universal(1));
  CHECK(r1.info_bound == 0);
  CHECK(r1.reticulations == 0);
  CHECK(r1.ratio == 0.0);
}

TEST_CASE("scaffold bound holds exactly") {
  for (int n = 2; n <= 512; ++n) CHECK(scaffold_bound_holds(n));
  // The big-integer fallback agrees with a direct double check well away
  // from the boundary.
  for (int n : {2, 3, 5, 16, 100}) {
    std::int64_t lhs = 0;
    for (int i = 2; i <= n; ++i) lhs += retic_slot_count(i);
    CHECK(static_cast<double>(lhs) <= n * std::log2(static_cast<double>(n)) + 1e-9);
    CHECK(BigUint::pow2(static_cast<std::size_t>(lhs)) <=
          BigUint::pow(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n)));
  }
}

TEST_CASE("big integer helpers") {
  CHECK(BigUint(0).to_string() == "0");
  CHECK(BigUint(1234567890123456789ull).to_string() == "1234567890123456789");
  CHECK(BigUint::pow2(100).bit_length() == 101);
  CHECK(BigUint::pow2(100).is_power_of_two());
  CHECK(BigUint(15).ceil_log2() == 4);
  CHECK(BigUint(16).ceil_log2() == 4);
  CHECK(BigUint(17).ceil_log2() == 5);
  CHECK(BigUint::pow(10, 20).to_string() == "100000000000000000000");
}
