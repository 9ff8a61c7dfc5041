#include "rmt/presets.hpp"

namespace rmt {

namespace {

Instance star_paths(const std::vector<NodeId>& relays) {
  NodeSet nodes{"S", "R"};
  EdgeSet edges;
  SetFamily maximal;
  for (const NodeId& v : relays) {
    nodes.insert(v);
    edges.insert(Edge("S", v));
    edges.insert(Edge(v, "R"));
    maximal.insert(NodeSet{v});
  }
  Graph g(nodes, edges);
  auto z = AdversaryStructure::normalize(nodes, maximal);
  auto gamma = ad_hoc_view(g);
  return Instance::validated(std::move(g), std::move(z), std::move(gamma),
                             "S", "R");
}

}  // namespace

Instance path_instance() { return star_paths({"u"}); }

Instance two_path_instance() { return star_paths({"v1", "v2"}); }

Instance three_path_instance() { return star_paths({"v1", "v2", "v3"}); }

}  // namespace rmt
