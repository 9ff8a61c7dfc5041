#include "rmt/adversary.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "rmt/error.hpp"

namespace rmt {

namespace {

constexpr std::size_t kJoinGroundLimit = 16;
constexpr std::size_t kJoinPairLimit = 50'000'000;
constexpr std::size_t kClosureSetLimit = 20;

void all_t_subsets(const std::vector<NodeId>& pool, std::size_t t,
                   std::size_t start, NodeSet& current, SetFamily& out) {
  if (current.size() == t) {
    out.insert(current);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    current.insert(pool[i]);
    all_t_subsets(pool, t, i + 1, current, out);
    current.erase(pool[i]);
  }
}

}  // namespace

AdversaryStructure AdversaryStructure::normalize(NodeSet ground,
                                                 const SetFamily& family) {
  for (const NodeSet& s : family)
    for (const NodeId& x : s)
      if (!ground.count(x))
        throw ValidationError("set member '" + x + "' is not in the ground set");

  // Largest sets first; every dominated set has a superset already accepted.
  std::vector<const NodeSet*> by_size;
  by_size.reserve(family.size());
  for (const NodeSet& s : family) by_size.push_back(&s);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const NodeSet* a, const NodeSet* b) {
                     return a->size() > b->size();
                   });

  std::vector<const NodeSet*> accepted;
  for (const NodeSet* s : by_size) {
    bool dominated = false;
    for (const NodeSet* a : accepted)
      if (is_subset(*s, *a)) {
        dominated = true;
        break;
      }
    if (!dominated) accepted.push_back(s);
  }

  SetFamily maximal;
  for (const NodeSet* s : accepted) maximal.insert(*s);
  if (maximal.empty()) maximal.insert(NodeSet{});
  return AdversaryStructure(std::move(ground), std::move(maximal));
}

AdversaryStructure AdversaryStructure::threshold(NodeSet ground,
                                                 std::size_t t) {
  if (t >= ground.size())
    return normalize(std::move(ground), SetFamily{ground});
  if (t == 0) return normalize(std::move(ground), SetFamily{});
  std::vector<NodeId> pool(ground.begin(), ground.end());
  SetFamily fam;
  NodeSet current;
  all_t_subsets(pool, t, 0, current, fam);
  return normalize(std::move(ground), fam);
}

bool AdversaryStructure::member(const NodeSet& candidate) const {
  if (!is_subset(candidate, ground_)) return false;
  for (const NodeSet& m : maximal_)
    if (is_subset(candidate, m)) return true;
  return false;
}

SetFamily AdversaryStructure::members() const {
  SetFamily out;
  for (const NodeSet& m : maximal_) {
    if (m.size() > kClosureSetLimit)
      throw SizeLimitError("downward closure of a set with more than " +
                           std::to_string(kClosureSetLimit) + " nodes");
    std::vector<NodeId> v(m.begin(), m.end());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << v.size());
         ++mask) {
      NodeSet s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) s.insert(v[i]);
      out.insert(std::move(s));
    }
  }
  return out;
}

AdversaryStructure restrict_to(const AdversaryStructure& z, const NodeSet& a) {
  NodeSet ground = set_intersection(z.ground(), a);
  SetFamily fam;
  for (const NodeSet& m : z.maximal_sets())
    fam.insert(set_intersection(m, a));
  return AdversaryStructure::normalize(std::move(ground), fam);
}

AdversaryStructure join(const AdversaryStructure& e,
                        const AdversaryStructure& f) {
  NodeSet ground = set_union(e.ground(), f.ground());
  if (ground.size() > kJoinGroundLimit)
    throw SizeLimitError("joint operation over " +
                         std::to_string(ground.size()) +
                         " nodes exceeds the supported limit of " +
                         std::to_string(kJoinGroundLimit));

  const SetFamily me = e.members();
  const SetFamily mf = f.members();

  // Bucket the members of f by their footprint on ground(e); only pairs with
  // matching footprints can agree on the overlap.
  std::map<NodeSet, std::vector<const NodeSet*>> f_by_overlap;
  for (const NodeSet& z2 : mf)
    f_by_overlap[set_intersection(z2, e.ground())].push_back(&z2);

  std::size_t pairs = 0;
  SetFamily unions;
  for (const NodeSet& z1 : me) {
    auto it = f_by_overlap.find(set_intersection(z1, f.ground()));
    if (it == f_by_overlap.end()) continue;
    pairs += it->second.size();
    if (pairs > kJoinPairLimit)
      throw SizeLimitError("joint operation member-pair count exceeds budget");
    for (const NodeSet* z2 : it->second) unions.insert(set_union(z1, *z2));
  }
  return AdversaryStructure::normalize(std::move(ground), unions);
}

bool order_geq(const AdversaryStructure& e, const AdversaryStructure& f) {
  return join(e, f) == e;
}

AdversaryStructure local_structure(const AdversaryStructure& z,
                                   const ViewFunction& gamma,
                                   const NodeId& v) {
  return restrict_to(z, gamma.view(v).nodes);
}

AdversaryStructure joint_structure(const AdversaryStructure& z,
                                   const ViewFunction& gamma,
                                   const NodeSet& b) {
  if (b.empty())
    throw ValidationError("joint structure of the empty node set is undefined");
  auto it = b.begin();
  AdversaryStructure acc = local_structure(z, gamma, *it);
  for (++it; it != b.end(); ++it)
    acc = join(acc, local_structure(z, gamma, *it));
  return acc;
}

}  // namespace rmt
