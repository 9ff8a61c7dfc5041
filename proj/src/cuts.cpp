#include "rmt/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "rmt/error.hpp"

namespace rmt {

namespace {

void validate_witness(const Instance& inst, const CutWitness& w,
                      bool parts_required) {
  const NodeSet& all = inst.graph.nodes();
  if (w.side_a.empty()) throw ValidationError("witness: side_a is empty");
  if (w.side_b.empty()) throw ValidationError("witness: side_b is empty");
  if (!w.side_a.count(inst.sender))
    throw ValidationError("witness: sender not in side_a");
  if (!w.side_b.count(inst.receiver))
    throw ValidationError("witness: receiver not in side_b");

  NodeSet seen = set_union(set_union(w.cut, w.side_a), w.side_b);
  if (seen != all ||
      w.cut.size() + w.side_a.size() + w.side_b.size() != all.size())
    throw ValidationError(
        "witness: cut, side_a and side_b do not partition the node set");

  for (const Edge& e : inst.graph.edges()) {
    bool a_touch = w.side_a.count(e.a) || w.side_a.count(e.b);
    bool b_touch = w.side_b.count(e.a) || w.side_b.count(e.b);
    if (a_touch && b_touch)
      throw ValidationError("witness: edge {" + e.a + ", " + e.b +
                            "} joins side_a and side_b");
  }

  if (parts_required) {
    if (set_union(w.part1, w.part2) != w.cut ||
        w.part1.size() + w.part2.size() != w.cut.size())
      throw ValidationError("witness: part1 and part2 do not partition the cut");
  }
}

bool zpp_condition(const Instance& inst,
                   const std::map<NodeId, AdversaryStructure>& locals,
                   const NodeSet& side_b, const NodeSet& part1,
                   const NodeSet& part2) {
  if (!inst.adversary.member(part1)) return false;
  for (const NodeId& u : side_b) {
    NodeSet seen = set_intersection(inst.graph.neighbors(u), part2);
    if (!locals.at(u).member(seen)) return false;
  }
  return true;
}

std::map<NodeId, AdversaryStructure> all_locals(const Instance& inst) {
  std::map<NodeId, AdversaryStructure> locals;
  for (const NodeId& v : inst.graph.nodes())
    locals.emplace(v, local_structure(inst.adversary, inst.gamma, v));
  return locals;
}

// part1 candidates in (size, bitmask) order over the sorted cut nodes.
template <typename Cond>
std::optional<CutWitness> search_cuts(const Instance& inst,
                                      const CutSearchLimits& limits,
                                      Cond&& condition) {
  if (inst.graph.nodes().size() > limits.max_nodes)
    throw SizeLimitError(
        "instance has " + std::to_string(inst.graph.nodes().size()) +
        " nodes, above the search limit of " + std::to_string(limits.max_nodes) +
        "; raise --size-limit to search anyway");

  for (CutWitness w : enumerate_cuts(inst.graph, inst.sender, inst.receiver)) {
    std::vector<NodeId> cut_nodes(w.cut.begin(), w.cut.end());
    std::vector<std::uint32_t> masks;
    masks.reserve(std::size_t{1} << cut_nodes.size());
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << cut_nodes.size()); ++m)
      masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t x, std::uint32_t y) {
                       return std::popcount(x) < std::popcount(y);
                     });
    for (std::uint32_t mask : masks) {
      NodeSet part1;
      for (std::size_t i = 0; i < cut_nodes.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) part1.insert(cut_nodes[i]);
      if (!inst.adversary.member(part1)) continue;
      NodeSet part2 = set_difference(w.cut, part1);
      if (condition(w.side_b, part1, part2)) {
        w.part1 = std::move(part1);
        w.part2 = std::move(part2);
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool check_zpp_cut(const Instance& inst, const CutWitness& w) {
  if (!is_ad_hoc(inst))
    throw ValidationError(
        "the partial-pair cut condition applies to ad hoc instances only");
  validate_witness(inst, w, /*parts_required=*/true);
  auto locals = all_locals(inst);
  return zpp_condition(inst, locals, w.side_b, w.part1, w.part2);
}

bool check_rmt_cut(const Instance& inst, const CutWitness& w) {
  validate_witness(inst, w, /*parts_required=*/true);
  if (!inst.adversary.member(w.part1)) return false;
  AdversaryStructure zb = joint_structure(inst.adversary, inst.gamma, w.side_b);
  NodeSet visible = joint_view(inst.gamma, w.side_b).nodes;
  return zb.member(set_intersection(w.part2, visible));
}

std::optional<CutWitness> find_zpp_cut(const Instance& inst,
                                       const CutSearchLimits& limits) {
  if (!is_ad_hoc(inst))
    throw ValidationError(
        "the partial-pair cut condition applies to ad hoc instances only");
  auto locals = all_locals(inst);
  return search_cuts(inst, limits,
                     [&](const NodeSet& side_b, const NodeSet& part1,
                         const NodeSet& part2) {
                       return zpp_condition(inst, locals, side_b, part1, part2);
                     });
}

std::optional<CutWitness> find_rmt_cut(const Instance& inst,
                                       const CutSearchLimits& limits) {
  // The receiver-side joint structure depends only on side_b; cache it
  // across splits and across cuts that share the same side.
  std::map<NodeSet, std::pair<AdversaryStructure, NodeSet>> cache;
  return search_cuts(
      inst, limits,
      [&](const NodeSet& side_b, const NodeSet& part1, const NodeSet& part2) {
        if (!inst.adversary.member(part1)) return false;
        auto it = cache.find(side_b);
        if (it == cache.end()) {
          auto zb = joint_structure(inst.adversary, inst.gamma, side_b);
          auto visible = joint_view(inst.gamma, side_b).nodes;
          it = cache.emplace(side_b, std::make_pair(std::move(zb),
                                                    std::move(visible)))
                   .first;
        }
        return it->second.first.member(
            set_intersection(part2, it->second.second));
      });
}

}  // namespace rmt
