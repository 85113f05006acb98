#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "utbn/canonical.hpp"
#include "utbn/treegen.hpp"

using namespace utbn;
using test::tree;

TEST_CASE("natural_less compares digit runs by value") {
  CHECK(natural_less("2", "10"));
  CHECK_FALSE(natural_less("10", "2"));
  CHECK(natural_less("a2", "a10"));
  CHECK(natural_less("a", "b"));
  CHECK_FALSE(natural_less("1", "1"));
  CHECK(natural_less("007", "8"));
}

TEST_CASE("tree_equal ignores notation, not labels") {
  CHECK(tree_equal(tree("(((1,2),3),4);"), tree("(4,(3,(2,1)));")));
  CHECK(tree_equal(tree("((1,2),3);"), tree("((2,1),3);")));
  CHECK_FALSE(tree_equal(tree("((1,3),2);"), tree("((1,2),3);")));
  CHECK(shape_equal(shape_of(tree("((1,3),2);")), shape_of(tree("((1,2),3);"))));
}

TEST_CASE("tree_equal is an equivalence on random relabelings") {
  PhyloTree a = random_tree(test::labels_1_to(7), 11);
  CHECK(tree_equal(a, a));
  // Relabel internal ids by rebuilding through Newick round-trip.
  PhyloTree b = parse_newick(to_newick(a));
  CHECK(tree_equal(a, b));
  CHECK(tree_equal(b, a));
}

TEST_CASE("relabeling preserves shape") {
  PhyloTree t = tree("((1,(2,3)),(4,5));");
  PhyloTree relabeled = tree("((5,(4,1)),(2,3));");
  CHECK(shape_equal(shape_of(t), shape_of(relabeled)));
}

TEST_CASE("105 five-leaf trees fall into 3 shapes") {
  TreeEnumerator enumerator(test::labels_1_to(5));
  REQUIRE(enumerator.size() == 105);
  std::set<std::string> shapes;
  enumerator.for_each(0, enumerator.size(), [&](std::uint64_t, const PhyloTree& t) {
    shapes.insert(shape_of(t).encoding());
  });
  CHECK(shapes.size() == 3);
}

TEST_CASE("shape leaf indexing matches the label order") {
  ShapedTree shaped = shape_with_labels(tree("((3,4),((1,2),5));"));
  REQUIRE(shaped.leaf_labels.size() == 5);
  // Canonical order is deterministic; labels land where their leaves sit.
  std::multiset<std::string> labels(shaped.leaf_labels.begin(), shaped.leaf_labels.end());
  CHECK(labels == std::multiset<std::string>{"1", "2", "3", "4", "5"});
  CHECK(shaped.shape.leaf_count() == 5);
}
