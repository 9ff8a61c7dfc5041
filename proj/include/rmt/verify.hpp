#pragma once

#include "rmt/cuts.hpp"
#include "rmt/engine.hpp"
#include "rmt/instance_io.hpp"

namespace rmt {

/// Empirical check of the tightness results on one ad hoc instance:
///   - no partial-pair cut: an exhaustive behavior search for every maximal
///     corrupted set must deliver in every behavior;
///   - a cut with witness part1: searching with corrupted = part1 must show
///     at least one non-delivering behavior and no unsafe one.
struct VerifyOptions {
  MessageValue x = "0";
  SearchOptions search;
  CutSearchLimits cut_limits;
};

struct InstanceVerdict {
  enum class Status { Pass, Fail, SkippedBudget };

  std::string digest;
  bool has_cut = false;
  CutWitness witness;  // meaningful when has_cut
  Status status = Status::Pass;
  std::string detail;
  std::size_t corrupted_sets_checked = 0;
  std::size_t terminal_sets_skipped = 0;
  std::uint64_t behaviors = 0;
  std::uint64_t unsafe_runs = 0;
};

struct VerifyReport {
  std::vector<InstanceVerdict> instances;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped_budget = 0;
  std::uint64_t behaviors_total = 0;
  std::uint64_t unsafe_total = 0;

  bool all_pass() const { return failed == 0; }
};

InstanceVerdict verify_instance(const Instance& inst,
                                const VerifyOptions& opts);
VerifyReport verify_instances(const std::vector<Instance>& instances,
                              const VerifyOptions& opts);

nlohmann::json verdict_to_json(const InstanceVerdict& v);
nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace rmt
