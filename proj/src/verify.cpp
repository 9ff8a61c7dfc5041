#include "rmt/verify.hpp"

#include "rmt/error.hpp"

namespace rmt {

using nlohmann::json;

InstanceVerdict verify_instance(const Instance& inst,
                                const VerifyOptions& opts) {
  if (!is_ad_hoc(inst))
    throw ValidationError("the verify suite runs on ad hoc instances only");

  InstanceVerdict v;
  v.digest = instance_digest(inst);
  auto witness = find_zpp_cut(inst, opts.cut_limits);
  v.has_cut = witness.has_value();

  try {
    if (!witness) {
      // Feasibility face: every maximal corrupted set, every behavior.
      for (const NodeSet& m : inst.adversary.maximal_sets()) {
        if (m.count(inst.sender) || m.count(inst.receiver)) {
          ++v.terminal_sets_skipped;
          continue;
        }
        SearchSummary s = exhaustive_search(inst, opts.x, m, opts.search);
        ++v.corrupted_sets_checked;
        v.behaviors += s.total_behaviors;
        v.unsafe_runs += s.unsafe;
        if (s.any_undecided || s.any_unsafe) {
          v.status = InstanceVerdict::Status::Fail;
          v.detail = "corrupted " + format_set(m) + ": " +
                     std::to_string(s.undecided) + " undecided, " +
                     std::to_string(s.unsafe) + " unsafe behaviors";
          return v;
        }
      }
    } else {
      v.witness = *witness;
      SearchSummary s =
          exhaustive_search(inst, opts.x, witness->part1, opts.search);
      ++v.corrupted_sets_checked;
      v.behaviors += s.total_behaviors;
      v.unsafe_runs += s.unsafe;
      if (!s.any_undecided) {
        v.status = InstanceVerdict::Status::Fail;
        v.detail = "cut witness part1 " + format_set(witness->part1) +
                   " but every behavior delivered";
      } else if (s.any_unsafe) {
        v.status = InstanceVerdict::Status::Fail;
        v.detail = "unsafe behavior under corrupted " +
                   format_set(witness->part1);
      }
    }
  } catch (const BudgetError& e) {
    v.status = InstanceVerdict::Status::SkippedBudget;
    v.detail = e.what();
  }
  return v;
}

VerifyReport verify_instances(const std::vector<Instance>& instances,
                              const VerifyOptions& opts) {
  VerifyReport r;
  for (const Instance& inst : instances) {
    InstanceVerdict v = verify_instance(inst, opts);
    switch (v.status) {
      case InstanceVerdict::Status::Pass:
        ++r.passed;
        break;
      case InstanceVerdict::Status::Fail:
        ++r.failed;
        break;
      case InstanceVerdict::Status::SkippedBudget:
        ++r.skipped_budget;
        break;
    }
    r.behaviors_total += v.behaviors;
    r.unsafe_total += v.unsafe_runs;
    r.instances.push_back(std::move(v));
  }
  return r;
}

json verdict_to_json(const InstanceVerdict& v) {
  json j;
  j["digest"] = v.digest;
  j["classification"] = v.has_cut ? "cut" : "no_cut";
  if (v.has_cut) j["witness"] = witness_to_json(v.witness);
  switch (v.status) {
    case InstanceVerdict::Status::Pass:
      j["status"] = "pass";
      break;
    case InstanceVerdict::Status::Fail:
      j["status"] = "fail";
      break;
    case InstanceVerdict::Status::SkippedBudget:
      j["status"] = "skipped_budget";
      break;
  }
  if (!v.detail.empty()) j["detail"] = v.detail;
  j["corrupted_sets_checked"] = v.corrupted_sets_checked;
  j["terminal_sets_skipped"] = v.terminal_sets_skipped;
  j["behaviors"] = v.behaviors;
  j["unsafe_runs"] = v.unsafe_runs;
  return j;
}

json report_to_json(const VerifyReport& r) {
  json j;
  json items = json::array();
  for (const auto& v : r.instances) items.push_back(verdict_to_json(v));
  j["instances"] = std::move(items);
  j["totals"] = {{"instances", r.instances.size()},
                 {"pass", r.passed},
                 {"fail", r.failed},
                 {"skipped_budget", r.skipped_budget},
                 {"behaviors", r.behaviors_total},
                 {"unsafe_runs", r.unsafe_total}};
  return j;
}

}  // namespace rmt
