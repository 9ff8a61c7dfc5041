#pragma once

#include <cstddef>
#include <optional>

#include "rmt/instance.hpp"

namespace rmt {

struct CutSearchLimits {
  std::size_t max_nodes = 12;
};

/// Partial-pair condition for the ad hoc model: part1 is a member of the
/// adversary structure, and for every node u on the receiver side the cut
/// neighbors that u sees in part2 form a member of u's local structure.
/// Requires an ad hoc instance and a fully split witness.
bool check_zpp_cut(const Instance& inst, const CutWitness& w);

/// Partial-knowledge analogue: part1 is a member of the adversary structure,
/// and part2 intersected with the nodes of the receiver side's joint view is
/// a member of the receiver side's joint structure.
bool check_rmt_cut(const Instance& inst, const CutWitness& w);

/// Brute-force existence search over all cuts and all part1/part2 splits.
/// These conditions are NP-hard to check in general; the searches are
/// deliberately exhaustive and guarded by a node-count limit. The first
/// witness in canonical order is returned (cut order as produced by
/// enumerate_cuts, splits by part1 size then bitmask).
std::optional<CutWitness> find_zpp_cut(const Instance& inst,
                                       const CutSearchLimits& limits = {});
std::optional<CutWitness> find_rmt_cut(const Instance& inst,
                                       const CutSearchLimits& limits = {});

}  // namespace rmt
