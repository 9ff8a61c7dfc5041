#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rmt/protocol.hpp"

namespace rmt {

using Trace = std::vector<std::pair<int, ProtocolMessage>>;

enum class Verdict { Delivered, Undecided, Unsafe };

const char* verdict_name(Verdict v);

/// Result of one synchronous execution. `receiver_output` is set iff the
/// receiver decided; the verdict compares it against the value the sender
/// was asked to transmit.
struct ExecutionOutcome {
  Verdict verdict = Verdict::Undecided;
  std::optional<MessageValue> receiver_output;
  int rounds_used = 0;  // delivery rounds executed
  std::optional<int> decision_round;  // round in which the receiver decided
  Trace trace;
  std::map<NodeId, std::optional<MessageValue>> honest_decisions;
  bool admissible = true;
  std::vector<std::string> notes;
};

/// A Byzantine behavior: the corrupted set plus a function producing the
/// messages the corrupted nodes inject into round `round`, given the trace
/// of everything delivered in earlier rounds. `horizon` is the last round
/// with possible output; a quiet round past the horizon ends the run.
struct AdversaryBehavior {
  NodeSet corrupted;
  std::function<std::vector<ProtocolMessage>(int round, const Trace& history)>
      strategy;
  int horizon = 0;
  std::string name = "custom";
};

struct RunOptions {
  bool allow_inadmissible = false;
  int max_rounds = 0;  // 0 means one round per node
};

/// Synchronous round-driven execution: round 1 delivers the sender's
/// fan-out together with the behavior's round-1 messages; each later round
/// delivers the previous round's relay batches plus the behavior's output.
/// All of a round's messages reach honest players as simultaneous batches,
/// processed in node order. Corrupted players are not simulated at all;
/// their traffic is whatever the behavior fabricates (real edges only).
/// Execution stops when nothing is pending and the behavior is past its
/// horizon, or after the round cap, whichever comes first.
ExecutionOutcome run(const Instance& inst, const MessageValue& x,
                     const AdversaryBehavior& behavior,
                     const RunOptions& opts = {});

// ---------------------------------------------------------------------------
// Strategy library
// ---------------------------------------------------------------------------

AdversaryBehavior silent_behavior(NodeSet corrupted);
AdversaryBehavior constant_lie(const Instance& inst, NodeSet corrupted,
                               MessageValue y);
AdversaryBehavior equivocate(const Instance& inst, NodeSet corrupted,
                             std::map<NodeId, MessageValue> per_neighbor);
AdversaryBehavior delayed_lie(const Instance& inst, NodeSet corrupted,
                              int start_round, MessageValue y);

// ---------------------------------------------------------------------------
// Exhaustive behavior search
// ---------------------------------------------------------------------------

/// One fully specified adversary schedule: for each enumerated directed edge
/// (corrupted node -> honest node other than the sender) and each round up
/// to the horizon, either silence (-1) or an index into the alphabet.
/// Messages aimed at the sender or at fellow corrupted nodes never reach a
/// live state machine, so they are excluded from the enumeration; this
/// quotients the raw space without changing any run's verdict.
struct BehaviorMatrix {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<MessageValue> alphabet;
  std::vector<std::vector<int>> rows;  // rows[r-1][e], -1 = no send

  AdversaryBehavior to_behavior(NodeSet corrupted) const;
};

struct SearchOptions {
  std::vector<MessageValue> alphabet{"0", "1"};
  int horizon = 0;  // 0 means one round per node (also the hard cap)
  std::uint64_t space_budget = 1'000'000'000'000ULL;  // full behavior count
  std::uint64_t node_budget = 20'000'000;  // simulated round applications
  bool static_only = false;  // constant per-edge schedules only
  bool allow_inadmissible = false;
};

struct SearchSummary {
  bool any_unsafe = false;
  bool any_undecided = false;
  std::uint64_t total_behaviors = 0;
  std::uint64_t delivered = 0;
  std::uint64_t undecided = 0;
  std::uint64_t unsafe = 0;
  std::uint64_t explored_nodes = 0;
  int horizon = 0;
  std::size_t edge_count = 0;
  bool static_mode = false;
  std::optional<BehaviorMatrix> undecided_witness;
  std::optional<BehaviorMatrix> unsafe_witness;
};

/// Runs every behavior in which each corrupted node, in each round up to the
/// horizon, sends one alphabet value or nothing along each enumerated edge,
/// and aggregates the verdicts. Aggregation is exact: once the receiver has
/// halted the verdict of every continuation is fixed, so whole subtrees are
/// counted without being walked. Witnesses are the first bad behaviors in
/// canonical order. Throws BudgetError when the space or the explored-state
/// budget is exceeded; restricting to static strategies (static_only) or
/// lowering the horizon shrinks the space.
SearchSummary exhaustive_search(const Instance& inst, const MessageValue& x,
                                const NodeSet& corrupted,
                                const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

enum class AdversaryFamily { Threshold, RandomAntichain };
enum class ViewMode { AdHoc, Full, RandomSubgraph };

struct GeneratorSpec {
  std::size_t node_count = 5;
  double edge_density = 0.5;
  AdversaryFamily family = AdversaryFamily::Threshold;
  std::size_t threshold_t = 1;
  std::size_t antichain_sets = 2;
  std::size_t antichain_max_size = 2;
  // Keep the terminals out of every corruptible set (the simulator refuses
  // corrupted terminals without an override anyway).
  bool corruptible_excludes_endpoints = true;
  ViewMode view_mode = ViewMode::AdHoc;
  bool require_nonadjacent = false;
  std::size_t count = 1;
};

/// Deterministic: the same spec and seed always produce the same sequence.
/// Throws when the spec is unsatisfiable (for example non-adjacent terminals
/// requested in a complete graph).
std::vector<Instance> generate_instances(const GeneratorSpec& spec,
                                         std::uint64_t seed);

}  // namespace rmt
