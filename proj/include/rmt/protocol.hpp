#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rmt/instance.hpp"

namespace rmt {

// Values are opaque comparable tokens; runs typically draw them from a small
// alphabet such as {"0", "1"}.
using MessageValue = std::string;

struct ProtocolMessage {
  NodeId from;
  NodeId to;
  MessageValue value;
  auto operator<=>(const ProtocolMessage&) const = default;
};

enum class Role { Sender, Receiver, Relay };

/// Per-player certified-propagation state. `support[x]` holds the neighbors
/// that delivered value x so far; support accumulates over the whole
/// execution. A player decides at most once; a relay propagates exactly one
/// batch, right after deciding, and then halts.
struct PlayerState {
  NodeId id;
  Role role = Role::Relay;
  std::map<MessageValue, NodeSet> support;
  std::optional<MessageValue> decision;
  bool relayed = false;
  bool halted = false;
};

PlayerState make_player(const Instance& inst, const NodeId& id);

/// The sender pushes its value to every neighbor and terminates.
std::vector<ProtocolMessage> sender_initiate(const Instance& inst,
                                             const MessageValue& x,
                                             PlayerState& sender);

/// Applies one round's deliveries to one player and evaluates the decision
/// rules once over the whole batch:
///   rule 1: a neighbor of the sender decides on the value the sender sent;
///   rule 2: any other player decides on x once the supporters of x stop
///           being a member of its local adversary structure.
/// Returns the relay fan-out when this batch triggers the first decision of
/// a relay. Two distinct values becoming decidable in the same batch is a
/// contradiction fault: it cannot happen while the corrupted set stays
/// inside the declared structure, so it is reported loudly rather than
/// tie-broken.
std::vector<ProtocolMessage> deliver_batch(
    PlayerState& state, const Instance& inst, const AdversaryStructure& local,
    std::span<const ProtocolMessage> batch);

/// Single-message form of deliver_batch.
std::vector<ProtocolMessage> deliver(PlayerState& state, const Instance& inst,
                                     const AdversaryStructure& local,
                                     const ProtocolMessage& msg);

}  // namespace rmt
