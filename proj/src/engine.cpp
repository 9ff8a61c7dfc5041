#include "rmt/engine.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>

#include "rmt/error.hpp"

namespace rmt {

namespace {

constexpr int kMaxFastNodes = 16;
constexpr int kMaxFastValues = 6;

std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

void check_corrupted_set(const Instance& inst, const NodeSet& corrupted,
                         bool allow_inadmissible, bool& admissible,
                         std::vector<std::string>& notes) {
  for (const NodeId& c : corrupted)
    if (!inst.graph.has_node(c))
      throw ValidationError("corrupted node '" + c + "' is not in the graph");
  admissible = inst.adversary.member(corrupted);
  bool touches_terminals =
      corrupted.count(inst.sender) || corrupted.count(inst.receiver);
  if (!admissible || touches_terminals) {
    if (!allow_inadmissible) {
      std::string why = !admissible
                            ? "set " + format_set(corrupted) +
                                  " is not a member of the adversary structure"
                            : "set " + format_set(corrupted) +
                                  " touches the sender or receiver";
      throw InadmissibleError(why +
                              "; pass --allow-inadmissible to run anyway");
    }
    if (!admissible) notes.push_back("out_of_structure");
    if (touches_terminals) notes.push_back("nonstandard_terminals");
  }
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Delivered: return "delivered";
    case Verdict::Undecided: return "undecided";
    case Verdict::Unsafe: return "unsafe";
  }
  return "?";
}

ExecutionOutcome run(const Instance& inst, const MessageValue& x,
                     const AdversaryBehavior& behavior,
                     const RunOptions& opts) {
  ExecutionOutcome out;
  check_corrupted_set(inst, behavior.corrupted, opts.allow_inadmissible,
                      out.admissible, out.notes);

  std::map<NodeId, PlayerState> players;
  std::map<NodeId, AdversaryStructure> locals;
  for (const NodeId& v : inst.graph.nodes()) {
    if (behavior.corrupted.count(v)) continue;
    players.emplace(v, make_player(inst, v));
    locals.emplace(v, local_structure(inst.adversary, inst.gamma, v));
  }

  std::vector<ProtocolMessage> outbox;
  if (!behavior.corrupted.count(inst.sender))
    outbox = sender_initiate(inst, x, players.at(inst.sender));

  const int cap = opts.max_rounds > 0
                      ? opts.max_rounds
                      : static_cast<int>(inst.graph.nodes().size());
  for (int round = 1; round <= cap; ++round) {
    std::vector<ProtocolMessage> pending = std::move(outbox);
    outbox.clear();
    if (round <= behavior.horizon && behavior.strategy) {
      for (ProtocolMessage& m : behavior.strategy(round, out.trace)) {
        if (!behavior.corrupted.count(m.from))
          throw ProtocolViolation("behavior emits from honest node '" +
                                  m.from + "'");
        if (!inst.graph.has_edge(m.from, m.to))
          throw ProtocolViolation("behavior emits on non-edge {" + m.from +
                                  ", " + m.to + "}");
        pending.push_back(std::move(m));
      }
    }
    if (pending.empty()) {
      if (round > behavior.horizon) break;  // quiescent for good
      continue;
    }

    std::sort(pending.begin(), pending.end(),
              [](const ProtocolMessage& a, const ProtocolMessage& b) {
                return std::tie(a.to, a.from, a.value) <
                       std::tie(b.to, b.from, b.value);
              });
    out.rounds_used = round;
    for (const ProtocolMessage& m : pending) out.trace.emplace_back(round, m);

    auto it = pending.begin();
    while (it != pending.end()) {
      auto batch_end = it;
      while (batch_end != pending.end() && batch_end->to == it->to)
        ++batch_end;
      auto player = players.find(it->to);
      if (player != players.end() && !player->second.halted) {
        bool was_decided = player->second.decision.has_value();
        auto sends = deliver_batch(
            player->second, inst, locals.at(it->to),
            std::span(&*it, static_cast<std::size_t>(batch_end - it)));
        outbox.insert(outbox.end(), sends.begin(), sends.end());
        if (!was_decided && player->second.decision &&
            it->to == inst.receiver)
          out.decision_round = round;
      }
      it = batch_end;
    }
  }

  for (const auto& [id, state] : players)
    out.honest_decisions[id] = state.decision;
  if (players.count(inst.receiver)) {
    const auto& decision = players.at(inst.receiver).decision;
    if (decision) {
      out.receiver_output = *decision;
      out.verdict = *decision == x ? Verdict::Delivered : Verdict::Unsafe;
    }
  } else {
    out.notes.push_back("receiver_corrupted");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strategy library
// ---------------------------------------------------------------------------

AdversaryBehavior silent_behavior(NodeSet corrupted) {
  AdversaryBehavior b;
  b.corrupted = std::move(corrupted);
  b.strategy = [](int, const Trace&) { return std::vector<ProtocolMessage>{}; };
  b.horizon = 0;
  b.name = "silent";
  return b;
}

namespace {

std::vector<ProtocolMessage> fan_out(const Instance& inst,
                                     const NodeSet& corrupted,
                                     const MessageValue& y) {
  std::vector<ProtocolMessage> msgs;
  for (const NodeId& c : corrupted)
    for (const NodeId& u : inst.graph.neighbors(c))
      msgs.push_back({c, u, y});
  return msgs;
}

}  // namespace

AdversaryBehavior constant_lie(const Instance& inst, NodeSet corrupted,
                               MessageValue y) {
  AdversaryBehavior b;
  auto msgs = fan_out(inst, corrupted, y);
  b.corrupted = std::move(corrupted);
  b.strategy = [msgs](int, const Trace&) { return msgs; };
  b.horizon = std::numeric_limits<int>::max();
  b.name = "constant_lie(" + y + ")";
  return b;
}

AdversaryBehavior equivocate(const Instance& inst, NodeSet corrupted,
                             std::map<NodeId, MessageValue> per_neighbor) {
  AdversaryBehavior b;
  std::vector<ProtocolMessage> msgs;
  for (const NodeId& c : corrupted)
    for (const NodeId& u : inst.graph.neighbors(c)) {
      auto it = per_neighbor.find(u);
      if (it != per_neighbor.end()) msgs.push_back({c, u, it->second});
    }
  b.corrupted = std::move(corrupted);
  b.strategy = [msgs](int, const Trace&) { return msgs; };
  b.horizon = std::numeric_limits<int>::max();
  b.name = "equivocate";
  return b;
}

AdversaryBehavior delayed_lie(const Instance& inst, NodeSet corrupted,
                              int start_round, MessageValue y) {
  AdversaryBehavior b;
  auto msgs = fan_out(inst, corrupted, y);
  b.corrupted = std::move(corrupted);
  b.strategy = [msgs, start_round](int round, const Trace&) {
    return round >= start_round ? msgs : std::vector<ProtocolMessage>{};
  };
  b.horizon = std::numeric_limits<int>::max();
  b.name = "delayed_lie(" + std::to_string(start_round) + ", " + y + ")";
  return b;
}

// ---------------------------------------------------------------------------
// Exhaustive behavior search
// ---------------------------------------------------------------------------

AdversaryBehavior BehaviorMatrix::to_behavior(NodeSet corrupted) const {
  AdversaryBehavior b;
  b.corrupted = std::move(corrupted);
  b.horizon = static_cast<int>(rows.size());
  auto edges_copy = edges;
  auto alpha_copy = alphabet;
  auto rows_copy = rows;
  b.strategy = [edges_copy, alpha_copy, rows_copy](
                   int round, const Trace&) -> std::vector<ProtocolMessage> {
    std::vector<ProtocolMessage> msgs;
    if (round < 1 || round > static_cast<int>(rows_copy.size())) return msgs;
    const auto& row = rows_copy[static_cast<std::size_t>(round - 1)];
    for (std::size_t e = 0; e < edges_copy.size(); ++e)
      if (row[e] >= 0)
        msgs.push_back({edges_copy[e].first, edges_copy[e].second,
                        alpha_copy[static_cast<std::size_t>(row[e])]});
    return msgs;
  };
  b.name = "matrix";
  return b;
}

namespace {

struct Compiled {
  int n = 0;
  std::vector<NodeId> ids;
  std::array<std::uint32_t, kMaxFastNodes> adj{};
  int sender = -1;
  int receiver = -1;
  std::uint32_t corrupted = 0;
  int value_count = 0;  // distinct values incl. the transmitted one
  int alpha_count = 0;  // adversary-sendable values
  std::vector<MessageValue> values;
  int x_value = -1;
  std::vector<std::vector<std::uint32_t>> local_max;  // per node index
  std::vector<std::pair<int, int>> adv_edges;
};

struct FastState {
  std::array<std::array<std::uint32_t, kMaxFastValues>, kMaxFastNodes>
      support{};
  std::array<std::int8_t, kMaxFastNodes> decision{};
  std::uint32_t halted = 0;
  std::array<std::uint32_t, kMaxFastValues> outbox{};
  bool outbox_nonempty = false;
};

bool mask_member(const std::vector<std::uint32_t>& antichain,
                 std::uint32_t candidate) {
  for (std::uint32_t m : antichain)
    if ((candidate & ~m) == 0) return true;
  return false;
}

Compiled compile(const Instance& inst, const MessageValue& x,
                 const NodeSet& corrupted,
                 const std::vector<MessageValue>& alphabet) {
  Compiled c;
  c.ids.assign(inst.graph.nodes().begin(), inst.graph.nodes().end());
  c.n = static_cast<int>(c.ids.size());
  if (c.n > kMaxFastNodes)
    throw SizeLimitError("behavior search supports at most " +
                         std::to_string(kMaxFastNodes) + " nodes");

  std::map<NodeId, int> index;
  for (int i = 0; i < c.n; ++i) index[c.ids[static_cast<std::size_t>(i)]] = i;
  for (const Edge& e : inst.graph.edges()) {
    c.adj[static_cast<std::size_t>(index[e.a])] |= bit(index[e.b]);
    c.adj[static_cast<std::size_t>(index[e.b])] |= bit(index[e.a]);
  }
  c.sender = index[inst.sender];
  c.receiver = index[inst.receiver];
  for (const NodeId& v : corrupted) c.corrupted |= bit(index[v]);

  c.values = alphabet;
  for (std::size_t i = 0; i < c.values.size(); ++i)
    for (std::size_t j = i + 1; j < c.values.size(); ++j)
      if (c.values[i] == c.values[j])
        throw ValidationError("alphabet value '" + c.values[i] +
                              "' listed twice");
  c.alpha_count = static_cast<int>(c.values.size());
  auto found = std::find(c.values.begin(), c.values.end(), x);
  if (found == c.values.end()) {
    c.values.push_back(x);
    c.x_value = static_cast<int>(c.values.size()) - 1;
  } else {
    c.x_value = static_cast<int>(found - c.values.begin());
  }
  c.value_count = static_cast<int>(c.values.size());
  if (c.value_count > kMaxFastValues)
    throw SizeLimitError("behavior search supports at most " +
                         std::to_string(kMaxFastValues) + " distinct values");

  c.local_max.resize(static_cast<std::size_t>(c.n));
  for (int i = 0; i < c.n; ++i) {
    const NodeId& id = c.ids[static_cast<std::size_t>(i)];
    if (corrupted.count(id)) continue;
    auto local = local_structure(inst.adversary, inst.gamma, id);
    for (const NodeSet& m : local.maximal_sets()) {
      std::uint32_t mask = 0;
      for (const NodeId& v : m) mask |= bit(index[v]);
      c.local_max[static_cast<std::size_t>(i)].push_back(mask);
    }
  }

  for (const NodeId& from : corrupted)
    for (const NodeId& to : inst.graph.neighbors(from)) {
      if (corrupted.count(to) || to == inst.sender) continue;
      c.adv_edges.emplace_back(index[from], index[to]);
    }
  return c;
}

FastState initial_state(const Compiled& c) {
  FastState st;
  st.decision.fill(-1);
  if (!(c.corrupted & bit(c.sender))) {
    st.decision[static_cast<std::size_t>(c.sender)] =
        static_cast<std::int8_t>(c.x_value);
    st.halted |= bit(c.sender);
    st.outbox[static_cast<std::size_t>(c.x_value)] |= bit(c.sender);
    st.outbox_nonempty = true;
  }
  return st;
}

// One synchronous round: previous relay batches plus one adversary row.
// row[e] is 0 for silence, otherwise 1 + alphabet index.
void apply_round(const Compiled& c, FastState& st, const std::int8_t* row) {
  std::array<std::array<std::uint32_t, kMaxFastValues>, kMaxFastNodes>
      adv_in{};
  bool any_adv = false;
  if (row)
    for (std::size_t e = 0; e < c.adv_edges.size(); ++e)
      if (row[e]) {
        adv_in[static_cast<std::size_t>(c.adv_edges[e].second)]
              [static_cast<std::size_t>(row[e] - 1)] |=
            bit(c.adv_edges[e].first);
        any_adv = true;
      }
  if (!st.outbox_nonempty && !any_adv) return;

  const auto outbox = st.outbox;
  st.outbox = {};
  st.outbox_nonempty = false;

  for (int w = 0; w < c.n; ++w) {
    if ((st.halted | c.corrupted) & bit(w)) continue;
    const auto wi = static_cast<std::size_t>(w);
    bool changed = false;
    int sender_value = -1;
    for (int v = 0; v < c.value_count; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      std::uint32_t incoming = (outbox[vi] & c.adj[wi]) | adv_in[wi][vi];
      if (!incoming) continue;
      st.support[wi][vi] |= incoming;
      changed = true;
      if (incoming & bit(c.sender)) sender_value = v;
    }
    if (!changed) continue;

    int decide = -1;
    if (c.adj[static_cast<std::size_t>(c.sender)] & bit(w)) {
      decide = sender_value;  // rule 1 only
    } else {
      for (int v = 0; v < c.value_count; ++v) {
        const auto vi = static_cast<std::size_t>(v);
        if (st.support[wi][vi] &&
            !mask_member(c.local_max[wi], st.support[wi][vi])) {
          if (decide >= 0)
            throw ContradictionFault(
                "player '" + c.ids[wi] + "' can certify two values at once");
          decide = v;
        }
      }
    }
    if (decide >= 0) {
      st.decision[wi] = static_cast<std::int8_t>(decide);
      st.halted |= bit(w);
      if (w != c.receiver) {
        st.outbox[static_cast<std::size_t>(decide)] |= bit(w);
        st.outbox_nonempty = true;
      }
    }
  }
}

Verdict fast_verdict(const Compiled& c, const FastState& st) {
  std::int8_t d = st.decision[static_cast<std::size_t>(c.receiver)];
  if (d < 0) return Verdict::Undecided;
  return d == c.x_value ? Verdict::Delivered : Verdict::Unsafe;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                         std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::nullopt;
    out *= base;
  }
  return out;
}

class Searcher {
 public:
  Searcher(const Compiled& c, const SearchOptions& opts, int horizon,
           int round_cap, std::uint64_t combos_per_round)
      : c_(c),
        opts_(opts),
        horizon_(horizon),
        round_cap_(round_cap),
        combos_per_round_(combos_per_round),
        edge_count_(c.adv_edges.size()) {
    rows_.assign(static_cast<std::size_t>(horizon_) * edge_count_, 0);
  }

  void search(const FastState& root) { dfs(1, root); }

  SearchSummary& summary() { return sum_; }

 private:
  void dfs(int round, const FastState& st) {
    if (st.halted & bit(c_.receiver)) {
      // Every continuation of this prefix ends the same way.
      std::uint64_t remaining = 1;
      if (round <= horizon_) {
        auto p = checked_pow(combos_per_round_,
                             static_cast<std::uint64_t>(horizon_ - round + 1));
        remaining = *p;  // bounded by the already-checked space size
      }
      tally(fast_verdict(c_, st), remaining, round - 1);
      return;
    }
    if (round > horizon_) {
      FastState tail = st;
      for (int r = round; r <= round_cap_ && tail.outbox_nonempty; ++r)
        apply_round(c_, tail, nullptr);
      tally(fast_verdict(c_, tail), 1, horizon_);
      return;
    }

    std::int8_t* row =
        rows_.empty() ? nullptr
                      : rows_.data() +
                            static_cast<std::size_t>(round - 1) * edge_count_;
    if (row) std::fill(row, row + edge_count_, std::int8_t{0});
    while (true) {
      FastState next = st;
      if (++sum_.explored_nodes > opts_.node_budget)
        throw BudgetError(
            "behavior search exceeded the explored-state budget of " +
            std::to_string(opts_.node_budget) +
            "; restrict to static strategies or lower the horizon");
      apply_round(c_, next, row);
      dfs(round + 1, next);

      std::size_t pos = 0;
      while (pos < edge_count_) {
        if (++row[pos] <= c_.alpha_count) break;
        row[pos] = 0;
        ++pos;
      }
      if (pos == edge_count_ || edge_count_ == 0) break;
    }
  }

  void tally(Verdict v, std::uint64_t multiplicity, int rows_applied) {
    switch (v) {
      case Verdict::Delivered:
        sum_.delivered += multiplicity;
        break;
      case Verdict::Undecided:
        sum_.undecided += multiplicity;
        if (!sum_.any_undecided) {
          sum_.any_undecided = true;
          sum_.undecided_witness = snapshot(rows_applied);
        }
        break;
      case Verdict::Unsafe:
        sum_.unsafe += multiplicity;
        if (!sum_.any_unsafe) {
          sum_.any_unsafe = true;
          sum_.unsafe_witness = snapshot(rows_applied);
        }
        break;
    }
  }

  BehaviorMatrix snapshot(int rows_applied) const {
    BehaviorMatrix m;
    for (const auto& [from, to] : c_.adv_edges)
      m.edges.emplace_back(c_.ids[static_cast<std::size_t>(from)],
                           c_.ids[static_cast<std::size_t>(to)]);
    m.alphabet.assign(c_.values.begin(),
                      c_.values.begin() + c_.alpha_count);
    m.rows.assign(static_cast<std::size_t>(horizon_),
                  std::vector<int>(edge_count_, -1));
    for (int r = 0; r < rows_applied; ++r)
      for (std::size_t e = 0; e < edge_count_; ++e)
        m.rows[static_cast<std::size_t>(r)][e] =
            rows_[static_cast<std::size_t>(r) * edge_count_ + e] - 1;
    return m;
  }

  const Compiled& c_;
  const SearchOptions& opts_;
  int horizon_;
  int round_cap_;
  std::uint64_t combos_per_round_;
  std::size_t edge_count_;
  std::vector<std::int8_t> rows_;
  SearchSummary sum_;
};

}  // namespace

SearchSummary exhaustive_search(const Instance& inst, const MessageValue& x,
                                const NodeSet& corrupted,
                                const SearchOptions& opts) {
  bool admissible = true;
  std::vector<std::string> notes;
  check_corrupted_set(inst, corrupted, opts.allow_inadmissible, admissible,
                      notes);

  const int n = static_cast<int>(inst.graph.nodes().size());
  const int round_cap = n;
  const int horizon =
      std::min(opts.horizon > 0 ? opts.horizon : n, round_cap);

  Compiled c = compile(inst, x, corrupted, opts.alphabet);
  const std::uint64_t choices =
      static_cast<std::uint64_t>(c.alpha_count) + 1;
  const std::uint64_t cells =
      opts.static_only
          ? c.adv_edges.size()
          : static_cast<std::uint64_t>(c.adv_edges.size()) *
                static_cast<std::uint64_t>(horizon);
  auto space = checked_pow(choices, cells);
  if (!space || *space > opts.space_budget)
    throw BudgetError(
        "behavior space " + std::to_string(choices) + "^" +
        std::to_string(cells) + " exceeds the budget of " +
        std::to_string(opts.space_budget) +
        "; restrict to static strategies or lower the horizon");

  SearchSummary sum;
  const FastState root = initial_state(c);

  if (c.corrupted & bit(c.receiver)) {
    // No simulated receiver, so nothing is ever delivered.
    sum.any_undecided = true;
    sum.undecided = *space;
    BehaviorMatrix m;
    for (const auto& [from, to] : c.adv_edges)
      m.edges.emplace_back(c.ids[static_cast<std::size_t>(from)],
                           c.ids[static_cast<std::size_t>(to)]);
    m.alphabet.assign(c.values.begin(), c.values.begin() + c.alpha_count);
    m.rows.assign(static_cast<std::size_t>(horizon),
                  std::vector<int>(c.adv_edges.size(), -1));
    sum.undecided_witness = std::move(m);
  } else if (opts.static_only) {
    std::vector<std::int8_t> row(c.adv_edges.size(), 0);
    std::uint64_t explored = 0;
    while (true) {
      FastState st = root;
      for (int r = 1;
           r <= horizon && !(st.halted & bit(c.receiver)); ++r) {
        apply_round(c, st, row.data());
        if (++explored > opts.node_budget)
          throw BudgetError(
              "behavior search exceeded the explored-state budget of " +
              std::to_string(opts.node_budget));
      }
      for (int r = horizon + 1;
           r <= round_cap && st.outbox_nonempty &&
           !(st.halted & bit(c.receiver));
           ++r)
        apply_round(c, st, nullptr);
      Verdict v = fast_verdict(c, st);
      switch (v) {
        case Verdict::Delivered:
          ++sum.delivered;
          break;
        case Verdict::Undecided:
          ++sum.undecided;
          break;
        case Verdict::Unsafe:
          ++sum.unsafe;
          break;
      }
      auto record_witness = [&](std::optional<BehaviorMatrix>& slot) {
        if (slot) return;
        BehaviorMatrix m;
        for (const auto& [from, to] : c.adv_edges)
          m.edges.emplace_back(c.ids[static_cast<std::size_t>(from)],
                               c.ids[static_cast<std::size_t>(to)]);
        m.alphabet.assign(c.values.begin(),
                          c.values.begin() + c.alpha_count);
        std::vector<int> cells_row(row.size());
        for (std::size_t e = 0; e < row.size(); ++e)
          cells_row[e] = row[e] - 1;
        m.rows.assign(static_cast<std::size_t>(horizon), cells_row);
        slot = std::move(m);
      };
      if (v == Verdict::Undecided) {
        sum.any_undecided = true;
        record_witness(sum.undecided_witness);
      }
      if (v == Verdict::Unsafe) {
        sum.any_unsafe = true;
        record_witness(sum.unsafe_witness);
      }

      std::size_t pos = 0;
      while (pos < row.size()) {
        if (++row[pos] <= c.alpha_count) break;
        row[pos] = 0;
        ++pos;
      }
      if (pos == row.size() || row.empty()) break;
    }
    sum.explored_nodes = explored;
  } else {
    const std::uint64_t combos_per_round =
        *checked_pow(choices, c.adv_edges.size());
    Searcher searcher(c, opts, horizon, round_cap, combos_per_round);
    searcher.search(root);
    sum = std::move(searcher.summary());
  }

  sum.total_behaviors = *space;
  sum.horizon = horizon;
  sum.edge_count = c.adv_edges.size();
  sum.static_mode = opts.static_only;
  return sum;
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

namespace {

// mt19937_64 plus modulo keeps the stream identical across platforms, which
// std::uniform_int_distribution does not guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(next() % n);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

NodeSet sample_subset(const std::vector<NodeId>& pool, std::size_t size,
                      Rng& rng) {
  std::vector<NodeId> shuffled = pool;
  for (std::size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
  NodeSet out;
  for (std::size_t i = 0; i < size && i < shuffled.size(); ++i)
    out.insert(shuffled[i]);
  return out;
}

Instance generate_one(const GeneratorSpec& spec, Rng& rng) {
  NodeSet nodes;
  std::vector<NodeId> ids;
  for (std::size_t i = 1; i <= spec.node_count; ++i) {
    std::string id = "v" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    nodes.insert(id);
    ids.push_back(id);
  }

  EdgeSet edges;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (rng.coin(spec.edge_density)) edges.insert(Edge(ids[i], ids[j]));
  Graph graph(nodes, edges);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const NodeId& s : ids)
    for (const NodeId& r : ids) {
      if (s == r) continue;
      if (spec.require_nonadjacent && graph.has_edge(s, r)) continue;
      pairs.emplace_back(s, r);
    }
  if (pairs.empty())
    throw ValidationError(
        "no admissible sender/receiver pair exists for this generator spec");
  const auto& [sender, receiver] = pairs[rng.below(pairs.size())];

  std::vector<NodeId> pool;
  for (const NodeId& v : ids) {
    if (spec.corruptible_excludes_endpoints && (v == sender || v == receiver))
      continue;
    pool.push_back(v);
  }

  AdversaryStructure adversary = AdversaryStructure::normalize(nodes, {});
  if (spec.family == AdversaryFamily::Threshold) {
    NodeSet pool_set(pool.begin(), pool.end());
    AdversaryStructure over_pool =
        AdversaryStructure::threshold(pool_set, spec.threshold_t);
    adversary =
        AdversaryStructure::normalize(nodes, over_pool.maximal_sets());
  } else {
    SetFamily fam;
    std::size_t sets = 1 + rng.below(std::max<std::size_t>(spec.antichain_sets, 1));
    for (std::size_t k = 0; k < sets; ++k) {
      std::size_t size =
          1 + rng.below(std::max<std::size_t>(spec.antichain_max_size, 1));
      if (!pool.empty()) fam.insert(sample_subset(pool, size, rng));
    }
    adversary = AdversaryStructure::normalize(nodes, fam);
  }

  ViewFunction gamma = ad_hoc_view(graph);
  if (spec.view_mode == ViewMode::Full) {
    gamma = full_view(graph);
  } else if (spec.view_mode == ViewMode::RandomSubgraph) {
    std::map<NodeId, Subgraph> views;
    for (const NodeId& v : ids) {
      Subgraph sub;
      sub.nodes.insert(v);
      for (const NodeId& u : ids)
        if (u != v && rng.coin(0.5)) sub.nodes.insert(u);
      for (const Edge& e : edges)
        if (sub.nodes.count(e.a) && sub.nodes.count(e.b) && rng.coin(0.7))
          sub.edges.insert(e);
      views.emplace(v, std::move(sub));
    }
    gamma = ViewFunction::against(graph, std::move(views));
  }

  return Instance::validated(std::move(graph), std::move(adversary),
                             std::move(gamma), sender, receiver);
}

}  // namespace

std::vector<Instance> generate_instances(const GeneratorSpec& spec,
                                         std::uint64_t seed) {
  if (spec.node_count < 2)
    throw ValidationError("generator needs at least two nodes");
  if (spec.node_count > kMaxFastNodes)
    throw ValidationError("generator supports at most " +
                          std::to_string(kMaxFastNodes) + " nodes");
  if (spec.edge_density < 0.0 || spec.edge_density > 1.0)
    throw ValidationError("edge density must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Instance> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i)
    out.push_back(generate_one(spec, rng));
  return out;
}

}  // namespace rmt
