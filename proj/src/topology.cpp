#include "rmt/topology.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "rmt/error.hpp"

namespace rmt {

Edge::Edge(NodeId x, NodeId y) {
  if (x == y) throw ValidationError("self-loop on node '" + x + "'");
  if (y < x) std::swap(x, y);
  a = std::move(x);
  b = std::move(y);
}

Graph::Graph(NodeSet nodes, EdgeSet edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (const NodeId& v : nodes_) adjacency_[v];
  for (const Edge& e : edges_) {
    if (!nodes_.count(e.a))
      throw ValidationError("edge endpoint '" + e.a + "' is not a node");
    if (!nodes_.count(e.b))
      throw ValidationError("edge endpoint '" + e.b + "' is not a node");
    adjacency_[e.a].insert(e.b);
    adjacency_[e.b].insert(e.a);
  }
}

bool Graph::has_edge(const NodeId& u, const NodeId& v) const {
  if (u == v) return false;
  return edges_.count(Edge(u, v)) != 0;
}

const NodeSet& Graph::neighbors(const NodeId& v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end())
    throw ValidationError("unknown node '" + v + "'");
  return it->second;
}

void validate_subgraph(const Graph& g, const Subgraph& sub,
                       const std::string& label) {
  for (const NodeId& v : sub.nodes)
    if (!g.has_node(v))
      throw ValidationError(label + ": node '" + v + "' is not in the graph");
  for (const Edge& e : sub.edges) {
    if (!g.edges().count(e))
      throw ValidationError(label + ": edge {" + e.a + ", " + e.b +
                            "} is not in the graph");
    if (!sub.nodes.count(e.a) || !sub.nodes.count(e.b))
      throw ValidationError(label + ": edge {" + e.a + ", " + e.b +
                            "} has an endpoint outside the subgraph nodes");
  }
}

ViewFunction ViewFunction::against(const Graph& g,
                                   std::map<NodeId, Subgraph> views) {
  for (const NodeId& v : g.nodes())
    if (!views.count(v))
      throw ValidationError("view function missing a view for node '" + v +
                            "'");
  for (const auto& [v, sub] : views) {
    if (!g.has_node(v))
      throw ValidationError("view given for undeclared node '" + v + "'");
    if (!sub.nodes.count(v))
      throw ValidationError("view of node '" + v + "' does not contain it");
    validate_subgraph(g, sub, "view of '" + v + "'");
  }
  ViewFunction out;
  out.views_ = std::move(views);
  return out;
}

const Subgraph& ViewFunction::view(const NodeId& v) const {
  auto it = views_.find(v);
  if (it == views_.end())
    throw ValidationError("no view for node '" + v + "'");
  return it->second;
}

ViewFunction ad_hoc_view(const Graph& g) {
  std::map<NodeId, Subgraph> views;
  for (const NodeId& v : g.nodes()) {
    Subgraph sub;
    sub.nodes.insert(v);
    for (const NodeId& u : g.neighbors(v)) {
      sub.nodes.insert(u);
      sub.edges.insert(Edge(u, v));
    }
    views.emplace(v, std::move(sub));
  }
  return ViewFunction::against(g, std::move(views));
}

ViewFunction full_view(const Graph& g) {
  std::map<NodeId, Subgraph> views;
  for (const NodeId& v : g.nodes())
    views.emplace(v, Subgraph{g.nodes(), g.edges()});
  return ViewFunction::against(g, std::move(views));
}

bool is_ad_hoc(const Graph& g, const ViewFunction& gamma) {
  return gamma == ad_hoc_view(g);
}

Subgraph joint_view(const ViewFunction& gamma, const NodeSet& s) {
  if (s.empty())
    throw ValidationError("joint view of the empty node set is undefined");
  Subgraph out;
  for (const NodeId& v : s) {
    const Subgraph& sub = gamma.view(v);
    out.nodes.insert(sub.nodes.begin(), sub.nodes.end());
    out.edges.insert(sub.edges.begin(), sub.edges.end());
  }
  return out;
}

NodeSet component_without(const Graph& g, const NodeId& v,
                          const NodeSet& removed) {
  NodeSet seen;
  if (removed.count(v)) return seen;
  std::deque<NodeId> work{v};
  seen.insert(v);
  while (!work.empty()) {
    NodeId cur = std::move(work.front());
    work.pop_front();
    for (const NodeId& u : g.neighbors(cur)) {
      if (removed.count(u) || seen.count(u)) continue;
      seen.insert(u);
      work.push_back(u);
    }
  }
  return seen;
}

std::vector<CutWitness> enumerate_cuts(const Graph& g, const NodeId& s,
                                       const NodeId& r) {
  if (s == r) throw ValidationError("sender and receiver coincide: '" + s + "'");
  if (!g.has_node(s)) throw ValidationError("unknown node '" + s + "'");
  if (!g.has_node(r)) throw ValidationError("unknown node '" + r + "'");

  NodeSet terminals{s, r};
  std::vector<NodeId> middle;
  for (const NodeId& v : g.nodes())
    if (!terminals.count(v)) middle.push_back(v);
  if (middle.size() > 26)
    throw SizeLimitError("cut enumeration over " +
                         std::to_string(middle.size()) +
                         " interior nodes is not supported");

  std::vector<std::uint32_t> masks;
  masks.reserve(std::size_t{1} << middle.size());
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << middle.size()); ++m)
    masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t x, std::uint32_t y) {
                     return std::popcount(x) < std::popcount(y);
                   });

  std::vector<CutWitness> out;
  for (std::uint32_t mask : masks) {
    NodeSet cut;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) cut.insert(middle[i]);
    NodeSet side_b = component_without(g, r, cut);
    if (side_b.count(s)) continue;  // s still reaches r
    NodeSet rest = set_difference(g.nodes(), cut);
    CutWitness w;
    w.cut = std::move(cut);
    w.side_a = set_difference(rest, side_b);
    w.side_b = std::move(side_b);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace rmt
