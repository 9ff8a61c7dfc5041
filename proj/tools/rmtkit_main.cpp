#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rmt/error.hpp"
#include "rmt/presets.hpp"
#include "rmt/verify.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Exit-status contract (documented in the README):
//   0 ok / found / delivered / all pass     2 usage, parse or validation
//   3 check: no cut found                   4 size limit or budget exceeded
//   5 verify: failures                     10 run: undecided
//  11 run: unsafe                          12 run: inadmissible corrupted set
//  13 run: protocol violation or contradiction fault
constexpr int kExitAbsent = 3;
constexpr int kExitLimit = 4;
constexpr int kExitVerifyFail = 5;
constexpr int kExitUndecided = 10;
constexpr int kExitUnsafe = 11;
constexpr int kExitInadmissible = 12;
constexpr int kExitFault = 13;

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
  }
};

void emit(json report, const Timer& timer) {
  report["timing_ms"] = timer.ms();
  std::cout << report.dump(2) << "\n";
}

rmt::NodeSet parse_id_csv(const std::string& csv) {
  rmt::NodeSet out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.insert(cur);
  return out;
}

std::vector<rmt::MessageValue> parse_alphabet(const std::string& csv) {
  std::vector<rmt::MessageValue> out;
  for (const auto& v : parse_id_csv(csv)) out.push_back(v);
  if (out.empty()) throw rmt::ValidationError("empty alphabet");
  return out;
}

struct GeneratorFlags {
  std::size_t nodes = 5;
  double density = 0.5;
  std::size_t count = 10;
  std::string family = "threshold";
  std::size_t threshold_t = 1;
  std::size_t sets = 2;
  std::size_t set_size = 2;
  std::string views = "ad_hoc";
  bool nonadjacent = false;
  bool include_endpoints = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--nodes", nodes, "node count (2..16)");
    cmd->add_option("--density", density, "edge probability in [0,1]");
    cmd->add_option("--count", count, "number of instances");
    cmd->add_option("--family", family, "adversary family: threshold|antichain");
    cmd->add_option("--t", threshold_t, "threshold t (family threshold)");
    cmd->add_option("--sets", sets, "max antichain sets (family antichain)");
    cmd->add_option("--set-size", set_size, "max antichain set size");
    cmd->add_option("--views", views, "view mode: ad_hoc|full|random");
    cmd->add_flag("--nonadjacent", nonadjacent,
                  "force non-adjacent sender/receiver");
    cmd->add_flag("--include-endpoints", include_endpoints,
                  "allow corruptible sets containing sender/receiver");
  }

  rmt::GeneratorSpec spec() const {
    rmt::GeneratorSpec s;
    s.node_count = nodes;
    s.edge_density = density;
    s.count = count;
    if (family == "threshold")
      s.family = rmt::AdversaryFamily::Threshold;
    else if (family == "antichain")
      s.family = rmt::AdversaryFamily::RandomAntichain;
    else
      throw rmt::ValidationError("unknown adversary family '" + family + "'");
    s.threshold_t = threshold_t;
    s.antichain_sets = sets;
    s.antichain_max_size = set_size;
    if (views == "ad_hoc")
      s.view_mode = rmt::ViewMode::AdHoc;
    else if (views == "full")
      s.view_mode = rmt::ViewMode::Full;
    else if (views == "random")
      s.view_mode = rmt::ViewMode::RandomSubgraph;
    else
      throw rmt::ValidationError("unknown view mode '" + views + "'");
    s.require_nonadjacent = nonadjacent;
    s.corruptible_excludes_endpoints = !include_endpoints;
    return s;
  }
};

int cmd_check(const std::string& path, const std::string& model,
              std::size_t size_limit) {
  Timer timer;
  rmt::InstanceFile file = rmt::load_instance_file(path);
  rmt::Instance inst = rmt::to_instance(file);
  rmt::CutSearchLimits limits{size_limit};
  std::optional<rmt::CutWitness> witness;
  if (model == "zpp")
    witness = rmt::find_zpp_cut(inst, limits);
  else if (model == "rmt")
    witness = rmt::find_rmt_cut(inst, limits);
  else
    throw rmt::ValidationError("unknown model '" + model +
                               "' (expected zpp or rmt)");
  json report;
  report["command"] = "check";
  report["model"] = model;
  report["digest"] = rmt::instance_digest(file);
  report["found"] = witness.has_value();
  report["witness"] = witness ? rmt::witness_to_json(*witness) : json(nullptr);
  emit(std::move(report), timer);
  return witness ? 0 : kExitAbsent;
}

int cmd_run(const std::string& path, const std::string& value,
            const std::string& strategy, const std::string& corrupted_csv,
            const std::string& lie, int start_round,
            const std::string& sends_csv, bool allow_inadmissible,
            int max_rounds, int horizon) {
  Timer timer;
  rmt::InstanceFile file = rmt::load_instance_file(path);
  rmt::Instance inst = rmt::to_instance(file);
  rmt::NodeSet corrupted = parse_id_csv(corrupted_csv);

  rmt::AdversaryBehavior behavior;
  if (strategy == "silent") {
    behavior = rmt::silent_behavior(corrupted);
  } else if (strategy == "constant_lie") {
    behavior = rmt::constant_lie(inst, corrupted, lie);
  } else if (strategy == "delayed_lie") {
    behavior = rmt::delayed_lie(inst, corrupted, start_round, lie);
  } else if (strategy == "equivocate") {
    std::map<rmt::NodeId, rmt::MessageValue> per_neighbor;
    for (const auto& item : parse_id_csv(sends_csv)) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw rmt::ValidationError("--sends entries look like node=value");
      per_neighbor[item.substr(0, eq)] = item.substr(eq + 1);
    }
    behavior = rmt::equivocate(inst, corrupted, std::move(per_neighbor));
  } else {
    throw rmt::ValidationError("unknown strategy '" + strategy + "'");
  }

  if (horizon > 0) behavior.horizon = std::min(behavior.horizon, horizon);

  rmt::RunOptions opts;
  opts.allow_inadmissible = allow_inadmissible;
  opts.max_rounds = max_rounds;
  rmt::ExecutionOutcome outcome = rmt::run(inst, value, behavior, opts);

  json report = rmt::outcome_to_json(outcome);
  report["command"] = "run";
  report["digest"] = rmt::instance_digest(file);
  report["value"] = value;
  report["strategy"] = behavior.name;
  report["corrupted"] = rmt::node_set_to_json(corrupted);
  emit(std::move(report), timer);

  switch (outcome.verdict) {
    case rmt::Verdict::Delivered: return 0;
    case rmt::Verdict::Undecided: return kExitUndecided;
    case rmt::Verdict::Unsafe: return kExitUnsafe;
  }
  return kExitUndecided;
}

int cmd_verify(bool named, const GeneratorFlags& gen, std::uint64_t seed,
               const std::string& x, const std::string& alphabet_csv,
               int horizon, std::uint64_t budget, std::uint64_t node_budget,
               std::size_t size_limit, const std::string& dump_dir) {
  Timer timer;
  std::vector<rmt::Instance> instances;
  json params;
  if (named) {
    instances.push_back(rmt::path_instance());
    instances.push_back(rmt::two_path_instance());
    instances.push_back(rmt::three_path_instance());
    params["suite"] = "named";
  } else {
    instances = rmt::generate_instances(gen.spec(), seed);
    params["suite"] = "generated";
    params["seed"] = seed;
    params["count"] = gen.count;
    params["nodes"] = gen.nodes;
    params["density"] = gen.density;
  }

  rmt::VerifyOptions opts;
  opts.x = x;
  opts.search.alphabet = parse_alphabet(alphabet_csv);
  opts.search.horizon = horizon;
  opts.search.space_budget = budget;
  opts.search.node_budget = node_budget;
  opts.cut_limits.max_nodes = size_limit;

  rmt::VerifyReport result = rmt::verify_instances(instances, opts);

  json report = rmt::report_to_json(result);
  report["command"] = "verify";
  report["params"] = std::move(params);

  json failures = json::array();
  for (std::size_t i = 0; i < result.instances.size(); ++i) {
    const auto& v = result.instances[i];
    if (v.status != rmt::InstanceVerdict::Status::Fail) continue;
    rmt::InstanceFile reproducer = rmt::from_instance(instances[i]);
    json failure;
    failure["digest"] = v.digest;
    failure["reason"] = v.detail;
    failure["instance"] = json::parse(rmt::serialize_instance_file(reproducer));
    if (!dump_dir.empty()) {
      std::filesystem::create_directories(dump_dir);
      auto dump_path =
          std::filesystem::path(dump_dir) / ("rmt_" + v.digest + ".json");
      std::ofstream out(dump_path);
      out << rmt::serialize_instance_file(reproducer);
      failure["dump"] = dump_path.string();
    }
    failures.push_back(std::move(failure));
  }
  report["failures"] = std::move(failures);
  emit(std::move(report), timer);
  return result.all_pass() ? 0 : kExitVerifyFail;
}

int cmd_algebra(const std::string& op, const std::string& structure_path,
                const std::string& structure2_path, const std::string& set_csv) {
  Timer timer;
  rmt::AdversaryStructure a = rmt::load_structure(structure_path);
  json report;
  report["command"] = "algebra";
  report["op"] = op;
  if (op == "join" || op == "geq") {
    if (structure2_path.empty())
      throw rmt::ValidationError("--structure2 required for " + op);
    rmt::AdversaryStructure b = rmt::load_structure(structure2_path);
    if (op == "join")
      report["result"] = rmt::structure_to_json(rmt::join(a, b));
    else
      report["result"] = rmt::order_geq(a, b);
  } else if (op == "restrict") {
    report["result"] =
        rmt::structure_to_json(rmt::restrict_to(a, parse_id_csv(set_csv)));
  } else if (op == "member") {
    report["result"] = a.member(parse_id_csv(set_csv));
  } else {
    throw rmt::ValidationError("unknown algebra op '" + op + "'");
  }
  emit(std::move(report), timer);
  return 0;
}

int cmd_gen(const std::string& preset, const GeneratorFlags& gen,
            std::uint64_t seed, const std::string& out_dir) {
  Timer timer;
  std::vector<std::pair<std::string, rmt::InstanceFile>> files;
  if (!preset.empty()) {
    rmt::Instance inst = preset == "path"        ? rmt::path_instance()
                         : preset == "two_path"  ? rmt::two_path_instance()
                         : preset == "three_path"
                             ? rmt::three_path_instance()
                             : throw rmt::ValidationError("unknown preset '" +
                                                          preset + "'");
    files.emplace_back(preset, rmt::from_instance(inst));
  } else {
    auto instances = rmt::generate_instances(gen.spec(), seed);
    for (const auto& inst : instances) {
      rmt::InstanceFile f = rmt::from_instance(inst);
      files.emplace_back("rmt_" + rmt::instance_digest(f), f);
    }
  }

  std::filesystem::create_directories(out_dir.empty() ? "." : out_dir);
  json written = json::array();
  for (const auto& [name, f] : files) {
    auto p = std::filesystem::path(out_dir.empty() ? "." : out_dir) /
             (name + ".json");
    std::ofstream out(p);
    out << rmt::serialize_instance_file(f);
    written.push_back(
        {{"file", p.string()}, {"digest", rmt::instance_digest(f)}});
  }
  json report;
  report["command"] = "gen";
  report["written"] = std::move(written);
  emit(std::move(report), timer);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliable message transmission toolkit: adversary-structure "
               "algebra, cut feasibility checks, and certified-propagation "
               "simulation"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  std::size_t size_limit = 12;
  std::uint64_t seed = 1;
  bool allow_inadmissible = false;
  int horizon = 0;
  std::string alphabet = "0,1";
  app.add_option("--size-limit", size_limit,
                 "node-count limit for cut searches")
      ->capture_default_str();
  app.add_option("--seed", seed, "generator seed")->capture_default_str();
  app.add_flag("--allow-inadmissible", allow_inadmissible,
               "run even when the corrupted set is out of structure");
  app.add_option("--horizon", horizon,
                 "adversary rounds (0 = one per node)");
  app.add_option("--alphabet", alphabet, "comma-separated adversary values")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "search for a cut witness");
  std::string check_path, check_model;
  check->add_option("instance", check_path, "instance file")->required();
  check->add_option("--model", check_model, "zpp | rmt")->required();

  auto* run_cmd = app.add_subcommand("run", "simulate one execution");
  std::string run_path, run_value = "0", run_strategy = "silent";
  std::string run_corrupted, run_lie = "1", run_sends;
  int run_start = 1, run_max_rounds = 0;
  run_cmd->add_option("instance", run_path, "instance file")->required();
  run_cmd->add_option("--value", run_value, "value the sender transmits")
      ->capture_default_str();
  run_cmd->add_option("--strategy", run_strategy,
                      "silent | constant_lie | equivocate | delayed_lie")
      ->capture_default_str();
  run_cmd->add_option("--corrupted", run_corrupted,
                      "comma-separated corrupted nodes");
  run_cmd->add_option("--lie", run_lie, "value for the lying strategies")
      ->capture_default_str();
  run_cmd->add_option("--start", run_start, "first lying round (delayed_lie)")
      ->capture_default_str();
  run_cmd->add_option("--sends", run_sends,
                      "per-neighbor values for equivocate, e.g. R=1,S=0");
  run_cmd->add_option("--max-rounds", run_max_rounds,
                      "round cap (0 = one per node)");

  auto* verify = app.add_subcommand(
      "verify", "classify instances by cut existence and check the "
                "matching exhaustive-search outcome");
  bool verify_named = false;
  std::string verify_x = "0", dump_dir;
  std::uint64_t budget = 1'000'000'000'000ULL, node_budget = 20'000'000;
  GeneratorFlags verify_gen;
  verify->add_flag("--named", verify_named,
                   "use the named path/two_path/three_path suite");
  verify_gen.attach(verify);
  verify->add_option("--x", verify_x, "transmitted value")
      ->capture_default_str();
  verify->add_option("--budget", budget, "behavior-space budget")
      ->capture_default_str();
  verify->add_option("--node-budget", node_budget,
                     "explored-state budget per search")
      ->capture_default_str();
  verify->add_option("--dump-dir", dump_dir, "directory for reproducer files");

  auto* algebra = app.add_subcommand("algebra", "structure operations");
  std::string alg_op, alg_structure, alg_structure2, alg_set;
  algebra->add_option("op", alg_op, "join | restrict | member | geq")
      ->required();
  algebra->add_option("--structure", alg_structure, "structure file")
      ->required();
  algebra->add_option("--structure2", alg_structure2, "second structure file");
  algebra->add_option("--set", alg_set, "comma-separated node set");

  auto* gen_cmd = app.add_subcommand("gen", "write instance files");
  std::string gen_preset, gen_out_dir;
  GeneratorFlags gen_flags;
  gen_cmd->add_option("--preset", gen_preset, "path | two_path | three_path");
  gen_flags.attach(gen_cmd);
  gen_cmd->add_option("--out-dir", gen_out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(check_path, check_model, size_limit);
    if (*run_cmd)
      return cmd_run(run_path, run_value, run_strategy, run_corrupted,
                     run_lie, run_start, run_sends, allow_inadmissible,
                     run_max_rounds, horizon);
    if (*verify)
      return cmd_verify(verify_named, verify_gen, seed, verify_x, alphabet,
                        horizon, budget, node_budget, size_limit, dump_dir);
    if (*algebra)
      return cmd_algebra(alg_op, alg_structure, alg_structure2, alg_set);
    if (*gen_cmd) return cmd_gen(gen_preset, gen_flags, seed, gen_out_dir);
  } catch (const rmt::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const rmt::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const rmt::InadmissibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInadmissible;
  } catch (const rmt::ProtocolViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFault;
  } catch (const rmt::ContradictionFault& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFault;
  } catch (const rmt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
