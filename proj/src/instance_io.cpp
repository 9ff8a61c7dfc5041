#include "rmt/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "rmt/error.hpp"

namespace rmt {

using nlohmann::json;

namespace {

const json& require(const json& j, const std::string& key) {
  if (!j.is_object()) throw ParseError("expected an object with key '" + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + key + "'");
  return *it;
}

std::string as_id(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string node id");
  std::string s = j.get<std::string>();
  if (s.empty()) throw ParseError(where + ": empty node id");
  return s;
}

NodeSet parse_id_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  NodeSet out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.insert(as_id(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

EdgeSet parse_edge_list(const json& j, const NodeSet& nodes,
                        const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  EdgeSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& e = j[i];
    if (!e.is_array() || e.size() != 2)
      throw ParseError(at + ": expected a two-element array");
    std::string a = as_id(e[0], at), b = as_id(e[1], at);
    if (!nodes.count(a)) throw ParseError(at + ": node '" + a + "' not declared");
    if (!nodes.count(b)) throw ParseError(at + ": node '" + b + "' not declared");
    if (a == b) throw ParseError(at + ": self-loop on '" + a + "'");
    out.insert(Edge(a, b));
  }
  return out;
}

json id_list(const NodeSet& s) {
  json out = json::array();
  for (const NodeId& v : s) out.push_back(v);
  return out;
}

json edge_list(const EdgeSet& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(json::array({e.a, e.b}));
  return out;
}

json family_list(const SetFamily& fam) {
  json out = json::array();
  for (const NodeSet& s : fam) out.push_back(id_list(s));
  return out;
}

}  // namespace

InstanceFile parse_instance_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance file must be a JSON object");

  InstanceFile f;
  f.nodes = parse_id_list(require(j, "nodes"), "nodes");
  f.edges = parse_edge_list(require(j, "edges"), f.nodes, "edges");

  const json& adv = require(j, "adversary_maximal");
  if (!adv.is_array()) throw ParseError("adversary_maximal: expected an array");
  for (std::size_t i = 0; i < adv.size(); ++i) {
    const std::string at = "adversary_maximal[" + std::to_string(i) + "]";
    NodeSet s = parse_id_list(adv[i], at);
    for (const NodeId& v : s)
      if (!f.nodes.count(v))
        throw ParseError(at + ": node '" + v + "' not declared");
    f.adversary_maximal.insert(std::move(s));
  }

  const json& views = require(j, "views");
  if (views.is_string()) {
    std::string literal = views.get<std::string>();
    if (literal == "ad_hoc")
      f.views_kind = InstanceFile::ViewsKind::AdHoc;
    else if (literal == "full")
      f.views_kind = InstanceFile::ViewsKind::Full;
    else
      throw ParseError("views: unknown literal '" + literal +
                       "' (expected \"ad_hoc\", \"full\" or a map)");
  } else if (views.is_object()) {
    f.views_kind = InstanceFile::ViewsKind::Explicit;
    for (auto it = views.begin(); it != views.end(); ++it) {
      const std::string at = "views." + it.key();
      if (!f.nodes.count(it.key()))
        throw ParseError(at + ": node not declared");
      Subgraph sub;
      sub.nodes = parse_id_list(require(*it, "nodes"), at + ".nodes");
      sub.edges = parse_edge_list(require(*it, "edges"), f.nodes, at + ".edges");
      f.explicit_views.emplace(it.key(), std::move(sub));
    }
    for (const NodeId& v : f.nodes)
      if (!f.explicit_views.count(v))
        throw ParseError("views: missing entry for node '" + v + "'");
  } else {
    throw ParseError("views: expected a literal string or a map");
  }

  f.sender = as_id(require(j, "sender"), "sender");
  f.receiver = as_id(require(j, "receiver"), "receiver");
  if (!f.nodes.count(f.sender))
    throw ParseError("sender: node '" + f.sender + "' not declared");
  if (!f.nodes.count(f.receiver))
    throw ParseError("receiver: node '" + f.receiver + "' not declared");
  return f;
}

InstanceFile load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string serialize_instance_file(const InstanceFile& f) {
  json j;
  j["nodes"] = id_list(f.nodes);
  j["edges"] = edge_list(f.edges);
  j["adversary_maximal"] = family_list(f.adversary_maximal);
  switch (f.views_kind) {
    case InstanceFile::ViewsKind::AdHoc:
      j["views"] = "ad_hoc";
      break;
    case InstanceFile::ViewsKind::Full:
      j["views"] = "full";
      break;
    case InstanceFile::ViewsKind::Explicit: {
      json v = json::object();
      for (const auto& [id, sub] : f.explicit_views) {
        json one;
        one["nodes"] = id_list(sub.nodes);
        one["edges"] = edge_list(sub.edges);
        v[id] = std::move(one);
      }
      j["views"] = std::move(v);
      break;
    }
  }
  j["sender"] = f.sender;
  j["receiver"] = f.receiver;
  return j.dump(2) + "\n";
}

Instance to_instance(const InstanceFile& f) {
  Graph g(f.nodes, f.edges);
  auto z = AdversaryStructure::normalize(f.nodes, f.adversary_maximal);
  ViewFunction gamma =
      f.views_kind == InstanceFile::ViewsKind::AdHoc  ? ad_hoc_view(g)
      : f.views_kind == InstanceFile::ViewsKind::Full ? full_view(g)
          : ViewFunction::against(g, f.explicit_views);
  return Instance::validated(std::move(g), std::move(z), std::move(gamma),
                             f.sender, f.receiver);
}

InstanceFile from_instance(const Instance& inst) {
  InstanceFile f;
  f.nodes = inst.graph.nodes();
  f.edges = inst.graph.edges();
  f.adversary_maximal = inst.adversary.maximal_sets();
  if (is_ad_hoc(inst)) {
    f.views_kind = InstanceFile::ViewsKind::AdHoc;
  } else if (inst.gamma == full_view(inst.graph)) {
    f.views_kind = InstanceFile::ViewsKind::Full;
  } else {
    f.views_kind = InstanceFile::ViewsKind::Explicit;
    f.explicit_views = inst.gamma.views();
  }
  f.sender = inst.sender;
  f.receiver = inst.receiver;
  return f;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string instance_digest(const InstanceFile& file) {
  std::uint64_t h = fnv1a64(serialize_instance_file(file));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string instance_digest(const Instance& inst) {
  return instance_digest(from_instance(inst));
}

AdversaryStructure parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  NodeSet ground = parse_id_list(require(j, "ground"), "ground");
  const json& fam = require(j, "maximal");
  if (!fam.is_array()) throw ParseError("maximal: expected an array");
  SetFamily family;
  for (std::size_t i = 0; i < fam.size(); ++i)
    family.insert(parse_id_list(fam[i], "maximal[" + std::to_string(i) + "]"));
  try {
    return AdversaryStructure::normalize(std::move(ground), family);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

AdversaryStructure load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_structure(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string serialize_structure(const AdversaryStructure& z) {
  return structure_to_json(z).dump(2) + "\n";
}

json structure_to_json(const AdversaryStructure& z) {
  json j;
  j["ground"] = id_list(z.ground());
  j["maximal"] = family_list(z.maximal_sets());
  return j;
}

json node_set_to_json(const NodeSet& s) { return id_list(s); }

json witness_to_json(const CutWitness& w) {
  json j;
  j["cut"] = id_list(w.cut);
  j["side_a"] = id_list(w.side_a);
  j["side_b"] = id_list(w.side_b);
  j["part1"] = id_list(w.part1);
  j["part2"] = id_list(w.part2);
  return j;
}

json matrix_to_json(const BehaviorMatrix& m) {
  // Only the actual sends; silent cells are implied.
  json sends = json::array();
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t e = 0; e < m.edges.size(); ++e)
      if (m.rows[r][e] >= 0)
        sends.push_back(json::array(
            {static_cast<int>(r + 1), m.edges[e].first, m.edges[e].second,
             m.alphabet[static_cast<std::size_t>(m.rows[r][e])]}));
  json j;
  j["rounds"] = m.rows.size();
  j["sends"] = std::move(sends);
  return j;
}

json summary_to_json(const SearchSummary& s) {
  json j;
  j["any_undecided"] = s.any_undecided;
  j["any_unsafe"] = s.any_unsafe;
  j["behaviors"] = s.total_behaviors;
  j["delivered"] = s.delivered;
  j["undecided"] = s.undecided;
  j["unsafe"] = s.unsafe;
  j["explored_nodes"] = s.explored_nodes;
  j["horizon"] = s.horizon;
  j["enumerated_edges"] = s.edge_count;
  j["static_mode"] = s.static_mode;
  if (s.undecided_witness)
    j["undecided_witness"] = matrix_to_json(*s.undecided_witness);
  if (s.unsafe_witness) j["unsafe_witness"] = matrix_to_json(*s.unsafe_witness);
  return j;
}

json outcome_to_json(const ExecutionOutcome& o) {
  json j;
  j["verdict"] = verdict_name(o.verdict);
  if (o.receiver_output)
    j["receiver_output"] = *o.receiver_output;
  else
    j["receiver_output"] = nullptr;
  j["rounds_used"] = o.rounds_used;
  if (o.decision_round)
    j["decision_round"] = *o.decision_round;
  else
    j["decision_round"] = nullptr;
  j["admissible"] = o.admissible;
  json trace = json::array();
  for (const auto& [round, m] : o.trace)
    trace.push_back(json::array({round, m.from, m.to, m.value}));
  j["trace"] = std::move(trace);
  json decisions = json::object();
  for (const auto& [id, d] : o.honest_decisions) {
    if (d)
      decisions[id] = *d;
    else
      decisions[id] = nullptr;
  }
  j["honest_decisions"] = std::move(decisions);
  json notes = json::array();
  for (const auto& n : o.notes) notes.push_back(n);
  j["notes"] = std::move(notes);
  return j;
}

}  // namespace rmt
