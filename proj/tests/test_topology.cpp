#include "doctest.h"

#include "rmt/error.hpp"
#include "rmt/topology.hpp"

using namespace rmt;

namespace {

Graph triangle() {
  return Graph({"R", "S", "a"}, {Edge("S", "a"), Edge("S", "R"), Edge("a", "R")});
}

Graph path_sur() {
  return Graph({"R", "S", "u"}, {Edge("S", "u"), Edge("u", "R")});
}

}  // namespace

TEST_CASE("edges normalize endpoint order and reject self-loops") {
  CHECK(Edge("b", "a") == Edge("a", "b"));
  CHECK_THROWS_AS(Edge("a", "a"), ValidationError);
}

TEST_CASE("graph construction validates endpoints") {
  CHECK_THROWS_AS(Graph({"a"}, {Edge("a", "b")}), ValidationError);
}

TEST_CASE("neighbors") {
  Graph t = triangle();
  CHECK(t.neighbors("S") == NodeSet{"a", "R"});

  Graph p = path_sur();
  CHECK(p.neighbors("u") == NodeSet{"S", "R"});

  Graph lonely({"S", "R", "w"}, {Edge("S", "R")});
  CHECK(lonely.neighbors("w").empty());

  CHECK_THROWS_AS(p.neighbors("nope"), ValidationError);
}

TEST_CASE("ad hoc views carry the incident edges only") {
  Graph p = path_sur();
  ViewFunction gamma = ad_hoc_view(p);
  CHECK(gamma.view("u").nodes == NodeSet{"S", "u", "R"});
  CHECK(gamma.view("u").edges == EdgeSet{Edge("S", "u"), Edge("u", "R")});

  Graph star({"c", "l1", "l2", "l3"},
             {Edge("c", "l1"), Edge("c", "l2"), Edge("c", "l3")});
  ViewFunction sv = ad_hoc_view(star);
  CHECK(sv.view("c").nodes == star.nodes());
  CHECK(sv.view("l1").nodes == NodeSet{"c", "l1"});
  CHECK(sv.view("l1").edges == EdgeSet{Edge("c", "l1")});
  // Leaves do not see edges among the other leaves' side of the star.
  CHECK(sv.view("l1").edges.size() == 1);
}

TEST_CASE("view function validation") {
  Graph p = path_sur();
  std::map<NodeId, Subgraph> views;
  for (const NodeId& v : p.nodes()) views[v] = Subgraph{{v}, {}};
  CHECK_NOTHROW(ViewFunction::against(p, views));

  auto missing = views;
  missing.erase("u");
  CHECK_THROWS_AS(ViewFunction::against(p, missing), ValidationError);

  auto no_self = views;
  no_self["u"] = Subgraph{{"S"}, {}};
  CHECK_THROWS_AS(ViewFunction::against(p, no_self), ValidationError);

  auto dangling = views;
  dangling["u"] = Subgraph{{"u"}, {Edge("S", "u")}};
  CHECK_THROWS_AS(ViewFunction::against(p, dangling), ValidationError);
}

TEST_CASE("joint view") {
  Graph p = path_sur();
  ViewFunction gamma = ad_hoc_view(p);

  CHECK(joint_view(gamma, {"u"}) == gamma.view("u"));

  Subgraph both = joint_view(gamma, {"S", "R"});
  CHECK(both.nodes == NodeSet{"S", "u", "R"});
  CHECK(both.edges == EdgeSet{Edge("S", "u"), Edge("u", "R")});

  // Joint view of everybody under ad hoc views is the whole graph; compare
  // against a direct union computed here.
  Subgraph everyone = joint_view(gamma, p.nodes());
  Subgraph direct;
  for (const NodeId& v : p.nodes()) {
    const Subgraph& sub = gamma.view(v);
    direct.nodes.insert(sub.nodes.begin(), sub.nodes.end());
    direct.edges.insert(sub.edges.begin(), sub.edges.end());
  }
  CHECK(everyone == direct);
  CHECK(everyone.nodes == p.nodes());
  CHECK(everyone.edges == p.edges());

  CHECK_THROWS_AS(joint_view(gamma, {}), ValidationError);
}

TEST_CASE("joint view is monotone in the node set") {
  Graph g({"R", "S", "a", "b"},
          {Edge("S", "a"), Edge("a", "b"), Edge("b", "R"), Edge("S", "b")});
  ViewFunction gamma = ad_hoc_view(g);
  NodeSet small{"S", "a"};
  NodeSet big{"S", "a", "R"};
  Subgraph sv = joint_view(gamma, small);
  Subgraph bv = joint_view(gamma, big);
  CHECK(is_subset(sv.nodes, bv.nodes));
  for (const Edge& e : sv.edges) CHECK(bv.edges.count(e) == 1);
}

TEST_CASE("cut enumeration on a path") {
  Graph p = path_sur();
  auto cuts = enumerate_cuts(p, "S", "R");
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].cut == NodeSet{"u"});
  CHECK(cuts[0].side_a == NodeSet{"S"});
  CHECK(cuts[0].side_b == NodeSet{"R"});
  CHECK(cuts[0].part1.empty());
}

TEST_CASE("cut enumeration on two disjoint paths") {
  Graph g({"R", "S", "v1", "v2"},
          {Edge("S", "v1"), Edge("v1", "R"), Edge("S", "v2"), Edge("v2", "R")});
  auto cuts = enumerate_cuts(g, "S", "R");
  // Exhaustive subset check: only {v1, v2} disconnects S from R.
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].cut == NodeSet{"v1", "v2"});
  CHECK(cuts[0].side_a == NodeSet{"S"});
  CHECK(cuts[0].side_b == NodeSet{"R"});
}

TEST_CASE("no cuts when sender and receiver are adjacent") {
  Graph t = triangle();
  CHECK(enumerate_cuts(t, "S", "R").empty());
}

TEST_CASE("cut enumeration rejects equal endpoints") {
  CHECK_THROWS_AS(enumerate_cuts(path_sur(), "S", "S"), ValidationError);
}

TEST_CASE("every emitted cut really separates") {
  Graph g({"R", "S", "a", "b", "c"},
          {Edge("S", "a"), Edge("a", "b"), Edge("b", "R"), Edge("S", "c"),
           Edge("c", "R")});
  auto cuts = enumerate_cuts(g, "S", "R");
  CHECK(!cuts.empty());
  for (const CutWitness& w : cuts) {
    NodeSet reach = component_without(g, "S", w.cut);
    CHECK(reach.count("R") == 0);
    CHECK(w.side_a.count("S") == 1);
    CHECK(w.side_b.count("R") == 1);
    // Partition check.
    CHECK(w.cut.size() + w.side_a.size() + w.side_b.size() ==
          g.nodes().size());
    for (const Edge& e : g.edges()) {
      bool a_side = w.side_a.count(e.a) || w.side_a.count(e.b);
      bool b_side = w.side_b.count(e.a) || w.side_b.count(e.b);
      CHECK(!(a_side && b_side));
    }
  }
}

TEST_CASE("is_ad_hoc distinguishes view functions") {
  Graph p = path_sur();
  CHECK(is_ad_hoc(p, ad_hoc_view(p)));
  CHECK(!is_ad_hoc(p, full_view(p)));
}
