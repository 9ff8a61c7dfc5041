#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rmt/engine.hpp"
#include "rmt/instance.hpp"

namespace rmt {

/// On-disk form of an instance. Views are either one of the literals
/// "ad_hoc" / "full" or an explicit per-node subgraph map; the literal used
/// in the file is preserved so canonical serialization is stable.
struct InstanceFile {
  enum class ViewsKind { AdHoc, Full, Explicit };

  NodeSet nodes;
  EdgeSet edges;
  SetFamily adversary_maximal;
  ViewsKind views_kind = ViewsKind::AdHoc;
  std::map<NodeId, Subgraph> explicit_views;
  NodeId sender;
  NodeId receiver;

  bool operator==(const InstanceFile&) const = default;
};

/// Parses instance-file JSON. Errors name the offending field or element.
InstanceFile parse_instance_file(const std::string& text);
InstanceFile load_instance_file(const std::filesystem::path& path);

/// Canonical serialization: sorted keys, sorted node lists, sorted edge and
/// maximal-set lists, two-space indentation, trailing newline. Serializing
/// any parse result reproduces these bytes exactly.
std::string serialize_instance_file(const InstanceFile& file);

Instance to_instance(const InstanceFile& file);

/// Wraps an instance for dumping; picks the "ad_hoc" or "full" literal when
/// the views structurally match, an explicit map otherwise.
InstanceFile from_instance(const Instance& inst);

/// FNV-1a 64-bit over the canonical serialization, as 16 hex digits.
std::string instance_digest(const InstanceFile& file);
std::string instance_digest(const Instance& inst);

std::uint64_t fnv1a64(std::string_view bytes);

// Structure files: {"ground": [...], "maximal": [[...], ...]}.
AdversaryStructure parse_structure(const std::string& text);
AdversaryStructure load_structure(const std::filesystem::path& path);
std::string serialize_structure(const AdversaryStructure& z);

// Report building blocks (used by the CLI and the verify suite).
nlohmann::json structure_to_json(const AdversaryStructure& z);
nlohmann::json node_set_to_json(const NodeSet& s);
nlohmann::json witness_to_json(const CutWitness& w);
nlohmann::json matrix_to_json(const BehaviorMatrix& m);
nlohmann::json summary_to_json(const SearchSummary& s);
nlohmann::json outcome_to_json(const ExecutionOutcome& o);

}  // namespace rmt
