#include "rmt/instance.hpp"

#include "rmt/error.hpp"

namespace rmt {

Instance Instance::validated(Graph graph, AdversaryStructure adversary,
                             ViewFunction gamma, NodeId sender,
                             NodeId receiver) {
  if (sender == receiver)
    throw ValidationError("sender and receiver coincide: '" + sender + "'");
  if (!graph.has_node(sender))
    throw ValidationError("sender '" + sender + "' is not a node");
  if (!graph.has_node(receiver))
    throw ValidationError("receiver '" + receiver + "' is not a node");
  if (adversary.ground() != graph.nodes())
    throw ValidationError(
        "adversary structure ground set differs from the node set");
  // Re-anchor the views to this graph; catches views built elsewhere.
  ViewFunction checked = ViewFunction::against(graph, gamma.views());
  return Instance{std::move(graph), std::move(adversary), std::move(checked),
                  std::move(sender), std::move(receiver)};
}

bool is_ad_hoc(const Instance& inst) {
  return is_ad_hoc(inst.graph, inst.gamma);
}

}  // namespace rmt
