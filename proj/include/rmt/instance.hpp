#pragma once

#include "rmt/adversary.hpp"
#include "rmt/topology.hpp"

namespace rmt {

/// One transmission problem: the network, the adversary structure over its
/// node set, the topology knowledge of every node, and the two terminals.
struct Instance {
  Graph graph;
  AdversaryStructure adversary;
  ViewFunction gamma;
  NodeId sender;
  NodeId receiver;

  static Instance validated(Graph graph, AdversaryStructure adversary,
                            ViewFunction gamma, NodeId sender,
                            NodeId receiver);
};

/// True when every node's view is exactly its immediate neighborhood.
bool is_ad_hoc(const Instance& inst);

}  // namespace rmt
