#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "utbn/canonical.hpp"
#include "utbn/embed.hpp"
#include "utbn/io.hpp"
#include "utbn/treegen.hpp"

using namespace utbn;
using test::tree;

TEST_CASE("newick parse basics") {
  PhyloTree t = tree("((1,2),3);");
  CHECK(validate_tree(t).ok());
  CHECK(t.leaf_labels() == std::vector<std::string>{"1", "2", "3"});
  CHECK(tree_equal(t, tree("(3,(2,1));")));

  PhyloTree single = tree("1;");
  CHECK(single.vertex_count() == 1);
  CHECK(to_newick(single) == "1;");
}

TEST_CASE("newick rejects malformed input") {
  CHECK_THROWS_AS(tree("((1,2,3),4);"), ParseError);  // non-binary
  CHECK_THROWS_AS(tree("((1,2),3)"), ParseError);     // missing ';'
  CHECK_THROWS_AS(tree("((1,2),3)x;"), ParseError);   // internal label
  CHECK_THROWS_AS(tree("((1,2),3:1.5);"), ParseError);
  CHECK_THROWS_AS(tree(""), ParseError);
  CHECK_THROWS_AS(tree("((1,),3);"), ParseError);
  try {
    tree("((1,2,3),4);");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);  // the comma that would start a third child
  }
}

TEST_CASE("newick canonical output orders by smallest descendant label") {
  CHECK(to_newick(tree("((10,2),1);")) == "(1,(2,10));");
  CHECK(to_newick(tree("((3,4),(2,1));")) == "((1,2),(3,4));");
}

TEST_CASE("newick round trip over every five-leaf tree") {
  TreeEnumerator enumerator(test::labels_1_to(5));
  enumerator.for_each(0, enumerator.size(), [&](std::uint64_t, const PhyloTree& t) {
    CHECK(tree_equal(parse_newick(to_newick(t)), t));
  });
}

TEST_CASE("enewick output") {
  PhyloTree single = tree("1;");
  CHECK(to_enewick(single) == "1;");

  PhyloTree plain = tree("((1,2),3);");
  CHECK(to_enewick(plain).find("#H") == std::string::npos);

  UniversalNet u4 = build_universal(4);
  std::string text = to_enewick(u4.net);
  std::set<std::string> tags;
  for (std::size_t pos = text.find("#H"); pos != std::string::npos; pos = text.find("#H", pos + 1)) {
    std::size_t end = pos + 2;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    tags.insert(text.substr(pos, end - pos));
  }
  CHECK(tags.size() == 13);
  // Each tag appears exactly twice.
  for (const auto& tag : tags) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(tag); pos != std::string::npos;
         pos = text.find(tag, pos + 1)) {
      std::size_t end = pos + tag.size();
      if (end == text.size() || !std::isdigit(static_cast<unsigned char>(text[end]))) ++count;
    }
    CHECK(count == 2);
  }
}

TEST_CASE("dot export is deterministic and styles reticulation edges") {
  PhyloTree t = tree("((1,2),(3,4));");
  std::string a = to_dot(t);
  CHECK(a == to_dot(t));
  CHECK(a.find("dashed") == std::string::npos);

  UniversalNet u18 = build_universal(18);
  std::string dot = to_dot(u18.net, &u18.coord);
  CHECK(dot == to_dot(u18.net, &u18.coord));
  std::size_t dashed = 0;
  for (std::size_t pos = dot.find("style=dashed"); pos != std::string::npos;
       pos = dot.find("style=dashed", pos + 1))
    ++dashed;
  CHECK(dashed == 2 * u18.reticulation_count);
}

TEST_CASE("dot highlights chosen edges") {
  UniversalNet u = build_universal(4);
  BaseTreeChoice choice = all_vertical_choice(u);
  std::string dot = to_dot(u.net, &u.coord, &choice);
  CHECK(dot.find("penwidth=2") != std::string::npos);
}

TEST_CASE("json graph round trip preserves structure and coordinates") {
  UniversalNet u = build_universal(5);
  std::string text = to_json_graph(u.net, &u.coord);
  CHECK(text == to_json_graph(u.net, &u.coord));
  JsonGraph back = from_json_graph(text);
  CHECK(back.net.vertex_count() == u.net.vertex_count());
  CHECK(back.net.edge_count() == u.net.edge_count());
  CHECK(back.net.root == u.net.root);
  CHECK(back.coords == u.coord);
  CHECK(to_json_graph(back.net, &back.coords) == text);
  CHECK(validate_network(back.net).ok());
}

TEST_CASE("choice files round trip and reject tampering") {
  UniversalNet u = build_universal(4);
  EmbedCertificate cert = embed_tree(u, tree("((1,2),(3,4));"));
  std::string text = to_choice_json(u, cert.choice);
  ChoiceFile file = parse_choice_json(text);
  BaseTreeChoice bound = bind_choice(u, file);
  CHECK(bound == cert.choice);

  ChoiceFile forged = file;
  forged.fingerprint[0] = forged.fingerprint[0] == '0' ? '1' : '0';
  CHECK_THROWS_AS(bind_choice(u, forged), std::invalid_argument);

  ChoiceFile unknown = file;
  unknown.entries[0].reticulation = "v9.9";
  CHECK_THROWS_AS(bind_choice(u, unknown), std::invalid_argument);
}

TEST_CASE("fingerprint is stable and input-sensitive") {
  CHECK(fingerprint("abc") == fingerprint("abc"));
  CHECK(fingerprint("abc") != fingerprint("abd"));
  CHECK(fingerprint("").size() == 16);
}
