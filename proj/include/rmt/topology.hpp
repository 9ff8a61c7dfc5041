#pragma once

#include <compare>
#include <map>
#include <vector>

#include "rmt/sets.hpp"

namespace rmt {

/// Undirected edge; endpoints are stored in sorted order so that equal edges
/// compare equal regardless of construction order. Self-loops are rejected.
struct Edge {
  NodeId a;
  NodeId b;
  Edge(NodeId x, NodeId y);
  auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

/// Immutable undirected network of players connected by authenticated
/// channels. Construction validates that no edge leaves the node set.
class Graph {
 public:
  Graph(NodeSet nodes, EdgeSet edges);

  const NodeSet& nodes() const { return nodes_; }
  const EdgeSet& edges() const { return edges_; }

  bool has_node(const NodeId& v) const { return nodes_.count(v) != 0; }
  bool has_edge(const NodeId& u, const NodeId& v) const;

  /// Nodes adjacent to v, v itself excluded. Unknown node is an error.
  const NodeSet& neighbors(const NodeId& v) const;

  bool operator==(const Graph& o) const {
    return nodes_ == o.nodes_ && edges_ == o.edges_;
  }

 private:
  NodeSet nodes_;
  EdgeSet edges_;
  std::map<NodeId, NodeSet> adjacency_;
};

/// A piece of topology knowledge: some nodes of a parent graph together with
/// some of the parent's edges among them.
struct Subgraph {
  NodeSet nodes;
  EdgeSet edges;
  bool operator==(const Subgraph&) const = default;
};

/// Throws unless sub.nodes and sub.edges come from g and every edge endpoint
/// is listed in sub.nodes. `label` names the subgraph in error messages.
void validate_subgraph(const Graph& g, const Subgraph& sub,
                       const std::string& label);

/// Total map from each node to the subgraph it knows. Each view must contain
/// its own node; beyond that, arbitrary subgraphs are accepted.
class ViewFunction {
 public:
  static ViewFunction against(const Graph& g,
                              std::map<NodeId, Subgraph> views);

  const Subgraph& view(const NodeId& v) const;
  const std::map<NodeId, Subgraph>& views() const { return views_; }

  bool operator==(const ViewFunction&) const = default;

 private:
  std::map<NodeId, Subgraph> views_;
};

/// View function of the ad hoc model: each node sees itself, its neighbors,
/// and exactly its incident edges.
ViewFunction ad_hoc_view(const Graph& g);

/// Every node sees the whole graph.
ViewFunction full_view(const Graph& g);

bool is_ad_hoc(const Graph& g, const ViewFunction& gamma);

/// Union of the views of the nodes in s. Empty s is an error.
Subgraph joint_view(const ViewFunction& gamma, const NodeSet& s);

/// A vertex cut separating the sender side from the receiver side, plus an
/// optional split of the cut into two parts. {side_a, side_b, cut} partition
/// the node set, no edge joins side_a and side_b, and part1/part2 (when
/// filled) partition cut.
struct CutWitness {
  NodeSet cut;
  NodeSet side_a;
  NodeSet side_b;
  NodeSet part1;
  NodeSet part2;
  bool operator==(const CutWitness&) const = default;
};

/// Connected component of v in g after deleting `removed`.
NodeSet component_without(const Graph& g, const NodeId& v,
                          const NodeSet& removed);

/// All node sets C within V minus {s,r} whose removal disconnects s from r.
/// side_b is fixed to the component of r in G-C and side_a to the rest;
/// any other valid bipartition only enlarges side_b, which can only
/// strengthen the per-B-node conditions evaluated downstream, so this
/// canonical choice is complete for existence checks. part1/part2 are left
/// empty. Witnesses are ordered by cut size, then by bitmask over the sorted
/// non-terminal nodes.
std::vector<CutWitness> enumerate_cuts(const Graph& g, const NodeId& s,
                                       const NodeId& r);

}  // namespace rmt
