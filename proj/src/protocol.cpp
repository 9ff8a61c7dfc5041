#include "rmt/protocol.hpp"

#include "rmt/error.hpp"

namespace rmt {

PlayerState make_player(const Instance& inst, const NodeId& id) {
  if (!inst.graph.has_node(id))
    throw ValidationError("unknown node '" + id + "'");
  PlayerState s;
  s.id = id;
  s.role = id == inst.sender     ? Role::Sender
           : id == inst.receiver ? Role::Receiver
                                 : Role::Relay;
  return s;
}

std::vector<ProtocolMessage> sender_initiate(const Instance& inst,
                                             const MessageValue& x,
                                             PlayerState& sender) {
  if (sender.id != inst.sender)
    throw ValidationError("sender_initiate on non-sender '" + sender.id + "'");
  if (sender.halted)
    throw ProtocolViolation("sender '" + sender.id + "' already initiated");
  std::vector<ProtocolMessage> out;
  for (const NodeId& u : inst.graph.neighbors(sender.id))
    out.push_back({sender.id, u, x});
  sender.decision = x;
  sender.relayed = true;
  sender.halted = true;
  return out;
}

std::vector<ProtocolMessage> deliver_batch(
    PlayerState& state, const Instance& inst, const AdversaryStructure& local,
    std::span<const ProtocolMessage> batch) {
  if (state.halted)
    throw ProtocolViolation("delivery to halted player '" + state.id + "'");

  const NodeSet& my_neighbors = inst.graph.neighbors(state.id);
  for (const ProtocolMessage& m : batch) {
    if (m.to != state.id)
      throw ProtocolViolation("message for '" + m.to + "' delivered to '" +
                              state.id + "'");
    if (!my_neighbors.count(m.from))
      throw ProtocolViolation("message from '" + m.from + "' to '" + m.to +
                              "' does not follow an edge");
    state.support[m.value].insert(m.from);
  }

  if (!state.decision) {
    if (my_neighbors.count(inst.sender)) {
      // Rule 1 players never fall through to rule 2.
      for (const ProtocolMessage& m : batch)
        if (m.from == inst.sender) {
          state.decision = m.value;
          break;
        }
    } else {
      std::vector<MessageValue> enabled;
      for (const auto& [value, supporters] : state.support)
        if (!local.member(supporters)) enabled.push_back(value);
      if (enabled.size() > 1)
        throw ContradictionFault(
            "player '" + state.id + "' can certify both '" + enabled[0] +
            "' and '" + enabled[1] + "' in one batch");
      if (enabled.size() == 1) state.decision = enabled[0];
    }
  }

  std::vector<ProtocolMessage> sends;
  if (state.decision) {
    if (state.role == Role::Relay) {
      for (const NodeId& u : my_neighbors)
        sends.push_back({state.id, u, *state.decision});
      state.relayed = true;
    }
    state.halted = true;
  }
  return sends;
}

std::vector<ProtocolMessage> deliver(PlayerState& state, const Instance& inst,
                                     const AdversaryStructure& local,
                                     const ProtocolMessage& msg) {
  return deliver_batch(state, inst, local, std::span(&msg, 1));
}

}  // namespace rmt
