#pragma once

// Test-side oracles. These recompute the set-family operations and the cut
// conditions from their definitions with none of the library's shortcuts:
// membership enumerates the full downward closure instead of testing subset
// containment against maximal sets, and cut existence enumerates every
// bipartition of the stray components instead of fixing side_b to the
// receiver's component.

#include <deque>
#include <random>
#include <vector>

#include "rmt/adversary.hpp"
#include "rmt/instance.hpp"

namespace oracle {

using rmt::NodeId;
using rmt::NodeSet;
using rmt::SetFamily;

// Downward closure via single-element removal, not via subset tests.
inline SetFamily naive_members(const SetFamily& maximal) {
  SetFamily out;
  std::deque<NodeSet> work(maximal.begin(), maximal.end());
  while (!work.empty()) {
    NodeSet s = std::move(work.front());
    work.pop_front();
    if (!out.insert(s).second) continue;
    for (const NodeId& x : s) {
      NodeSet t = s;
      t.erase(x);
      work.push_back(std::move(t));
    }
  }
  return out;
}

inline SetFamily naive_members(const rmt::AdversaryStructure& z) {
  return naive_members(z.maximal_sets());
}

inline bool naive_member(const rmt::AdversaryStructure& z, const NodeSet& c) {
  SetFamily closure = naive_members(z);
  return closure.count(c) != 0;
}

// Keeps exactly the sets with no strict superset in the family.
inline SetFamily naive_antichain(const SetFamily& family) {
  SetFamily out;
  for (const NodeSet& s : family) {
    bool dominated = false;
    for (const NodeSet& t : family) {
      if (s == t || t.size() < s.size()) continue;
      bool subset = true;
      for (const NodeId& x : s)
        if (!t.count(x)) {
          subset = false;
          break;
        }
      if (subset) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(s);
  }
  if (out.empty()) out.insert(NodeSet{});
  return out;
}

inline rmt::AdversaryStructure naive_restrict(const rmt::AdversaryStructure& z,
                                              const NodeSet& a) {
  SetFamily restricted;
  for (const NodeSet& m : naive_members(z))
    restricted.insert(rmt::set_intersection(m, a));
  return rmt::AdversaryStructure::normalize(
      rmt::set_intersection(z.ground(), a), naive_antichain(restricted));
}

inline rmt::AdversaryStructure naive_join(const rmt::AdversaryStructure& e,
                                          const rmt::AdversaryStructure& f) {
  SetFamily unions;
  for (const NodeSet& z1 : naive_members(e))
    for (const NodeSet& z2 : naive_members(f))
      if (rmt::set_intersection(z1, f.ground()) ==
          rmt::set_intersection(z2, e.ground()))
        unions.insert(rmt::set_union(z1, z2));
  return rmt::AdversaryStructure::normalize(
      rmt::set_union(e.ground(), f.ground()), naive_antichain(unions));
}

inline rmt::AdversaryStructure naive_joint(const rmt::AdversaryStructure& z,
                                           const rmt::ViewFunction& gamma,
                                           const NodeSet& b) {
  auto it = b.begin();
  auto acc = naive_restrict(z, gamma.view(*it).nodes);
  for (++it; it != b.end(); ++it)
    acc = naive_join(acc, naive_restrict(z, gamma.view(*it).nodes));
  return acc;
}

// Fresh breadth-first components, independent of the library's traversal.
inline std::vector<NodeSet> components(const rmt::Graph& g,
                                       const NodeSet& removed) {
  std::vector<NodeSet> out;
  NodeSet seen = removed;
  for (const NodeId& start : g.nodes()) {
    if (seen.count(start)) continue;
    NodeSet comp;
    std::deque<NodeId> work{start};
    seen.insert(start);
    comp.insert(start);
    while (!work.empty()) {
      NodeId cur = std::move(work.front());
      work.pop_front();
      for (const NodeId& u : g.neighbors(cur)) {
        if (seen.count(u)) continue;
        seen.insert(u);
        comp.insert(u);
        work.push_back(u);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Existence of a cut satisfying `condition(side_b, part1, part2)`, over
// every cut set, every assignment of stray components to the two sides, and
// every split of the cut.
template <typename Condition>
bool naive_cut_exists(const rmt::Instance& inst, Condition&& condition) {
  std::vector<NodeId> middle;
  for (const NodeId& v : inst.graph.nodes())
    if (v != inst.sender && v != inst.receiver) middle.push_back(v);

  for (std::uint32_t cut_mask = 0;
       cut_mask < (std::uint32_t{1} << middle.size()); ++cut_mask) {
    NodeSet cut;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (cut_mask & (std::uint32_t{1} << i)) cut.insert(middle[i]);

    auto comps = components(inst.graph, cut);
    NodeSet comp_s, comp_r;
    std::vector<NodeSet> strays;
    for (auto& comp : comps) {
      if (comp.count(inst.sender))
        comp_s = comp;
      else if (comp.count(inst.receiver))
        comp_r = comp;
      else
        strays.push_back(comp);
    }
    if (comp_s.count(inst.receiver)) continue;  // not a cut

    std::vector<NodeId> cut_nodes(cut.begin(), cut.end());
    for (std::uint32_t assign = 0;
         assign < (std::uint32_t{1} << strays.size()); ++assign) {
      NodeSet side_a = comp_s, side_b = comp_r;
      for (std::size_t i = 0; i < strays.size(); ++i) {
        auto& target = (assign & (std::uint32_t{1} << i)) ? side_b : side_a;
        target.insert(strays[i].begin(), strays[i].end());
      }
      for (std::uint32_t split = 0;
           split < (std::uint32_t{1} << cut_nodes.size()); ++split) {
        NodeSet part1, part2;
        for (std::size_t i = 0; i < cut_nodes.size(); ++i) {
          if (split & (std::uint32_t{1} << i))
            part1.insert(cut_nodes[i]);
          else
            part2.insert(cut_nodes[i]);
        }
        if (condition(side_b, part1, part2)) return true;
      }
    }
  }
  return false;
}

inline bool naive_zpp_exists(const rmt::Instance& inst) {
  SetFamily adversary_closure = naive_members(inst.adversary);
  std::map<NodeId, SetFamily> local_closures;
  for (const NodeId& v : inst.graph.nodes())
    local_closures.emplace(
        v, naive_members(naive_restrict(inst.adversary,
                                        inst.gamma.view(v).nodes)));
  return naive_cut_exists(
      inst, [&](const NodeSet& side_b, const NodeSet& part1,
                const NodeSet& part2) {
        if (!adversary_closure.count(part1)) return false;
        for (const NodeId& u : side_b)
          if (!local_closures.at(u).count(
                  rmt::set_intersection(inst.graph.neighbors(u), part2)))
            return false;
        return true;
      });
}

inline bool naive_rmt_exists(const rmt::Instance& inst) {
  SetFamily adversary_closure = naive_members(inst.adversary);
  // The joint structure depends on side_b alone; remember it per side.
  std::map<NodeSet, std::pair<SetFamily, NodeSet>> joint_cache;
  return naive_cut_exists(
      inst, [&](const NodeSet& side_b, const NodeSet& part1,
                const NodeSet& part2) {
        if (!adversary_closure.count(part1)) return false;
        auto it = joint_cache.find(side_b);
        if (it == joint_cache.end()) {
          auto zb = naive_joint(inst.adversary, inst.gamma, side_b);
          NodeSet visible;
          for (const NodeId& u : side_b) {
            const auto& nodes = inst.gamma.view(u).nodes;
            visible.insert(nodes.begin(), nodes.end());
          }
          it = joint_cache
                   .emplace(side_b, std::make_pair(naive_members(zb),
                                                   std::move(visible)))
                   .first;
        }
        return it->second.first.count(
                   rmt::set_intersection(part2, it->second.second)) != 0;
      });
}

// Deterministic structure generator shared by the property tests.
class StructureGen {
 public:
  explicit StructureGen(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }

  NodeSet subset_of(const std::vector<NodeId>& pool) {
    NodeSet out;
    for (const NodeId& v : pool)
      if (next() % 2) out.insert(v);
    return out;
  }

  rmt::AdversaryStructure structure_over(const std::vector<NodeId>& pool) {
    NodeSet ground = subset_of(pool);
    std::vector<NodeId> g(ground.begin(), ground.end());
    SetFamily fam;
    std::size_t sets = 1 + below(3);
    for (std::size_t i = 0; i < sets; ++i) fam.insert(subset_of(g));
    return rmt::AdversaryStructure::normalize(std::move(ground), fam);
  }

 private:
  std::mt19937_64 eng_;
};

inline const std::vector<NodeId>& pool6() {
  static const std::vector<NodeId> pool{"a", "b", "c", "d", "e", "f"};
  return pool;
}

}  // namespace oracle
