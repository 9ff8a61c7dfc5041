#pragma once

#include <cstddef>

#include "rmt/sets.hpp"
#include "rmt/topology.hpp"

namespace rmt {

/// Monotone family of corruptible node sets over a ground set, stored as the
/// antichain of its inclusion-maximal members. A set belongs to the family
/// iff it is contained in the ground set and in some maximal member. The
/// family that admits no corruption at all is stored as {{}} rather than as
/// an empty antichain.
class AdversaryStructure {
 public:
  /// Canonical constructor: drops non-maximal sets, deduplicates, and maps
  /// an empty family to {{}}. A set reaching outside `ground` is an error.
  static AdversaryStructure normalize(NodeSet ground, const SetFamily& family);

  /// All subsets of `ground` of size at most t (as an antichain: the
  /// t-subsets, or {ground} when t covers everything).
  static AdversaryStructure threshold(NodeSet ground, std::size_t t);

  const NodeSet& ground() const { return ground_; }
  const SetFamily& maximal_sets() const { return maximal_; }

  bool member(const NodeSet& candidate) const;

  /// Full downward closure, materialized. Desk scale only.
  SetFamily members() const;

  bool operator==(const AdversaryStructure&) const = default;

 private:
  AdversaryStructure(NodeSet ground, SetFamily maximal)
      : ground_(std::move(ground)), maximal_(std::move(maximal)) {}

  NodeSet ground_;
  SetFamily maximal_;
};

/// Family of intersections of members with `a`; the result lives over
/// ground(z) intersected with a.
AdversaryStructure restrict_to(const AdversaryStructure& z, const NodeSet& a);

/// Joint operation over two structures: all unions of a member of e with a
/// member of f that agree on the overlap of the two ground sets. Computed by
/// enumerating the downward closures of both antichains; pairing maximal
/// sets alone is not enough because the agreement condition can hold only
/// for non-maximal members.
AdversaryStructure join(const AdversaryStructure& e,
                        const AdversaryStructure& f);

/// Join-semilattice order: e is at least f iff join(e, f) equals e.
bool order_geq(const AdversaryStructure& e, const AdversaryStructure& f);

/// What node v knows of z given its view: z restricted to the nodes of
/// gamma(v).
AdversaryStructure local_structure(const AdversaryStructure& z,
                                   const ViewFunction& gamma, const NodeId& v);

/// Combined knowledge of the nodes in b: fold of the joint operation over
/// their local structures. b must be nonempty; the result does not depend on
/// the fold order.
AdversaryStructure joint_structure(const AdversaryStructure& z,
                                   const ViewFunction& gamma,
                                   const NodeSet& b);

}  // namespace rmt
