#pragma once

#include <set>
#include <string>

namespace rmt {

// Node identifiers are ordered strings; every set iteration in the library
// follows this order, which keeps traces and serializations reproducible.
using NodeId = std::string;
using NodeSet = std::set<NodeId>;
using SetFamily = std::set<NodeSet>;

bool is_subset(const NodeSet& a, const NodeSet& b);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);

/// "{a, b, c}" rendering for error messages and reports.
std::string format_set(const NodeSet& s);

}  // namespace rmt
