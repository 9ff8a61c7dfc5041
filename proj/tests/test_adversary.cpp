#include "doctest.h"

#include "oracles.hpp"
#include "rmt/adversary.hpp"
#include "rmt/engine.hpp"
#include "rmt/error.hpp"
#include "rmt/presets.hpp"

using namespace rmt;

namespace {

AdversaryStructure make(NodeSet ground, SetFamily fam) {
  return AdversaryStructure::normalize(std::move(ground), std::move(fam));
}

}  // namespace

TEST_CASE("membership is subset containment in a maximal set") {
  auto z = make({"a", "b", "c"}, {{"a", "b"}, {"c"}});
  CHECK(z.member({"a"}));
  CHECK(z.member({"a", "b"}));
  CHECK(!z.member({"a", "c"}));
  CHECK(z.member({}));
  CHECK(!z.member({"zzz"}));  // outside the ground set
}

TEST_CASE("normalize") {
  auto z = make({"a", "b"}, {{"a"}, {"a", "b"}});
  CHECK(z.maximal_sets() == SetFamily{{"a", "b"}});

  auto empty = make({"a", "b"}, {});
  CHECK(empty.maximal_sets() == SetFamily{NodeSet{}});

  auto dedup = make({"a", "b"}, {{"a"}, {"b"}, {"a"}});
  CHECK(dedup.maximal_sets() == SetFamily{{"a"}, {"b"}});

  CHECK_THROWS_AS(make({"a"}, {{"b"}}), ValidationError);
}

TEST_CASE("membership is monotone") {
  oracle::StructureGen gen(7001);
  for (int i = 0; i < 200; ++i) {
    auto z = gen.structure_over(oracle::pool6());
    NodeSet x = gen.subset_of(oracle::pool6());
    if (!z.member(x)) continue;
    for (const NodeId& drop : x) {
      NodeSet y = x;
      y.erase(drop);
      CHECK(z.member(y));
    }
  }
}

TEST_CASE("restrict") {
  auto z = make({"a", "b", "c"}, {{"a", "b"}, {"c"}});
  auto r = restrict_to(z, {"a", "c"});
  // Oracle: intersect every member, re-normalize.
  CHECK(r == oracle::naive_restrict(z, {"a", "c"}));
  CHECK(r.maximal_sets() == SetFamily{{"a"}, {"c"}});
  CHECK(r.ground() == NodeSet{"a", "c"});

  CHECK(restrict_to(z, z.ground()) == z);

  auto nothing = restrict_to(z, {});
  CHECK(nothing.ground().empty());
  CHECK(nothing.maximal_sets() == SetFamily{NodeSet{}});
}

TEST_CASE("restriction composes by intersection") {
  oracle::StructureGen gen(7002);
  for (int i = 0; i < 200; ++i) {
    auto z = gen.structure_over(oracle::pool6());
    NodeSet a = gen.subset_of(oracle::pool6());
    NodeSet b = gen.subset_of(oracle::pool6());
    CHECK(restrict_to(restrict_to(z, a), b) ==
          restrict_to(z, set_intersection(a, b)));
  }
}

TEST_CASE("join of the worked two-ground examples") {
  // Members that never touch the overlap always agree.
  auto e = make({"a", "b"}, {{"a"}});
  auto f = make({"b", "c"}, {{"c"}});
  auto j = join(e, f);
  CHECK(j.ground() == NodeSet{"a", "b", "c"});
  CHECK(j.maximal_sets() == SetFamily{{"a", "c"}});
  CHECK(j == oracle::naive_join(e, f));

  // {b} on the left pairs with nothing on the right.
  auto e2 = make({"a", "b"}, {{"b"}});
  auto j2 = join(e2, f);
  CHECK(j2.maximal_sets() == SetFamily{{"c"}});
  CHECK(j2 == oracle::naive_join(e2, f));
}

TEST_CASE("join ground is the union of grounds") {
  oracle::StructureGen gen(7003);
  for (int i = 0; i < 100; ++i) {
    auto e = gen.structure_over(oracle::pool6());
    auto f = gen.structure_over(oracle::pool6());
    CHECK(join(e, f).ground() == set_union(e.ground(), f.ground()));
  }
}

TEST_CASE("join agrees with the pair-enumeration oracle") {
  oracle::StructureGen gen(7004);
  for (int i = 0; i < 100; ++i) {
    auto e = gen.structure_over(oracle::pool6());
    auto f = gen.structure_over(oracle::pool6());
    CHECK(join(e, f) == oracle::naive_join(e, f));
  }
}

TEST_CASE("semilattice laws") {
  oracle::StructureGen gen(7005);
  for (int i = 0; i < 150; ++i) {
    auto e = gen.structure_over(oracle::pool6());
    auto f = gen.structure_over(oracle::pool6());
    auto g = gen.structure_over(oracle::pool6());
    CHECK(join(e, e) == e);
    CHECK(join(e, f) == join(f, e));
    CHECK(join(join(e, f), g) == join(e, join(f, g)));
  }
}

TEST_CASE("order is the join-semilattice order") {
  auto e = make({"a"}, {{"a"}});
  auto f = make({"b"}, {{"b"}});
  CHECK(order_geq(e, e));
  CHECK(!order_geq(e, f));  // the join lives over {a, b}

  oracle::StructureGen gen(7006);
  for (int i = 0; i < 50; ++i) {
    auto x = gen.structure_over(oracle::pool6());
    auto y = gen.structure_over(oracle::pool6());
    auto j = join(x, y);
    CHECK(order_geq(j, x));
    CHECK(order_geq(j, y));
  }
}

TEST_CASE("antichain invariant holds after every operation") {
  auto check_antichain = [](const AdversaryStructure& z) {
    for (const NodeSet& a : z.maximal_sets())
      for (const NodeSet& b : z.maximal_sets())
        if (a != b) CHECK(!is_subset(a, b));
    CHECK(!z.maximal_sets().empty());
  };
  oracle::StructureGen gen(7007);
  for (int i = 0; i < 50; ++i) {
    auto e = gen.structure_over(oracle::pool6());
    auto f = gen.structure_over(oracle::pool6());
    check_antichain(e);
    check_antichain(join(e, f));
    check_antichain(restrict_to(e, gen.subset_of(oracle::pool6())));
  }
}

TEST_CASE("local structure") {
  Instance inst = three_path_instance();
  auto at_r = local_structure(inst.adversary, inst.gamma, "R");
  // Restriction to {v1, v2, v3, R}: the singletons survive unchanged.
  CHECK(at_r.ground() == NodeSet{"R", "v1", "v2", "v3"});
  CHECK(at_r.maximal_sets() == SetFamily{{"v1"}, {"v2"}, {"v3"}});

  auto full = full_view(inst.graph);
  CHECK(local_structure(inst.adversary, full, "R") == inst.adversary);

  auto nothing = AdversaryStructure::normalize(inst.graph.nodes(), {});
  CHECK(local_structure(nothing, inst.gamma, "R").maximal_sets() ==
        SetFamily{NodeSet{}});
}

TEST_CASE("joint structure") {
  Instance inst = two_path_instance();
  CHECK(joint_structure(inst.adversary, inst.gamma, {"R"}) ==
        local_structure(inst.adversary, inst.gamma, "R"));

  // Heavily overlapping views: the fold collapses to a plain restriction.
  NodeSet b{"v1", "R"};
  auto folded = joint_structure(inst.adversary, inst.gamma, b);
  CHECK(folded == oracle::naive_joint(inst.adversary, inst.gamma, b));
  CHECK(folded == restrict_to(inst.adversary, {"S", "v1", "v2", "R"}));

  CHECK_THROWS_AS(joint_structure(inst.adversary, inst.gamma, {}),
                  ValidationError);
}

TEST_CASE("joint structure does not depend on fold order") {
  Instance inst = three_path_instance();
  NodeSet b{"v1", "v2", "R"};
  auto folded = joint_structure(inst.adversary, inst.gamma, b);
  // Fold in two other orders by hand.
  auto l = [&](const NodeId& v) {
    return local_structure(inst.adversary, inst.gamma, v);
  };
  CHECK(folded == join(l("R"), join(l("v2"), l("v1"))));
  CHECK(folded == join(join(l("v2"), l("R")), l("v1")));
}

TEST_CASE("joint structure members are exactly the locally consistent sets") {
  // Second route: X belongs to the fold iff X lies inside the joint view's
  // nodes and every node's slice of X belongs to that node's restriction.
  GeneratorSpec spec;
  spec.node_count = 5;
  spec.edge_density = 0.5;
  spec.family = AdversaryFamily::RandomAntichain;
  spec.antichain_max_size = 3;
  spec.corruptible_excludes_endpoints = false;
  spec.count = 12;
  oracle::StructureGen pick(7100);
  for (auto mode : {ViewMode::AdHoc, ViewMode::RandomSubgraph}) {
    spec.view_mode = mode;
    for (const Instance& inst : generate_instances(spec, 7110)) {
      NodeSet b;
      for (const NodeId& v : inst.graph.nodes())
        if (pick.below(2)) b.insert(v);
      if (b.empty()) b.insert(*inst.graph.nodes().begin());

      auto folded = joint_structure(inst.adversary, inst.gamma, b);
      NodeSet scope = joint_view(inst.gamma, b).nodes;
      std::vector<NodeId> scope_list(scope.begin(), scope.end());
      REQUIRE(scope_list.size() <= 16);
      for (std::uint32_t mask = 0;
           mask < (std::uint32_t{1} << scope_list.size()); ++mask) {
        NodeSet x;
        for (std::size_t i = 0; i < scope_list.size(); ++i)
          if (mask & (std::uint32_t{1} << i)) x.insert(scope_list[i]);
        bool consistent = true;
        for (const NodeId& v : b) {
          const NodeSet& seen = inst.gamma.view(v).nodes;
          if (!restrict_to(inst.adversary, seen)
                   .member(set_intersection(x, seen))) {
            consistent = false;
            break;
          }
        }
        CHECK(folded.member(x) == consistent);
      }
    }
  }
}

TEST_CASE("restriction of the union ground is contained in the join") {
  // Inclusion checked member by member with the closure oracle.
  oracle::StructureGen gen(7008);
  for (int i = 0; i < 100; ++i) {
    auto z = gen.structure_over(oracle::pool6());
    NodeSet a = gen.subset_of(oracle::pool6());
    NodeSet b = gen.subset_of(oracle::pool6());
    auto joined = join(restrict_to(z, a), restrict_to(z, b));
    auto joined_members = oracle::naive_members(joined);
    for (const NodeSet& m :
         oracle::naive_members(restrict_to(z, set_union(a, b))))
      CHECK(joined_members.count(m) == 1);
  }
}

TEST_CASE("threshold structures") {
  auto t1 = AdversaryStructure::threshold({"a", "b", "c", "d", "e"}, 1);
  CHECK(t1.maximal_sets() ==
        SetFamily{{"a"}, {"b"}, {"c"}, {"d"}, {"e"}});
  auto t0 = AdversaryStructure::threshold({"a"}, 0);
  CHECK(t0.maximal_sets() == SetFamily{NodeSet{}});
  auto all = AdversaryStructure::threshold({"a", "b"}, 5);
  CHECK(all.maximal_sets() == SetFamily{{"a", "b"}});
}
