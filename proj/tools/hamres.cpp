#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hrs/bench.hpp"
#include "hrs/embed.hpp"
#include "hrs/groebner_verify.hpp"
#include "hrs/ilp.hpp"
#include "hrs/oracle.hpp"
#include "hrs/set_io.hpp"
#include "hrs/shrink.hpp"

namespace {

using nlohmann::json;

constexpr int kExitResolving = 0;
constexpr int kExitNotResolving = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitRuntime = 4;

// All randomness flows through one seed; when omitted, a random one is drawn
// and logged so the run can be reproduced.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  std::random_device rd;
  std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  std::cerr << "seed = " << s << "\n";
  return s;
}

hrs::ObjectiveMode mode_from_flag(const std::string& mode) {
  if (mode == "exact") return hrs::ObjectiveMode::PowersOfTwo;
  if (mode == "feasibility") return hrs::ObjectiveMode::FeasibilityThreshold;
  if (mode == "random-objective") return hrs::ObjectiveMode::RandomNormal;
  throw CLI::ValidationError("--mode", "expected exact|feasibility|random-objective");
}

void print_verdict(const hrs::Verdict& v, bool as_json) {
  if (v.status == hrs::Status::NotResolving && v.witness) {
    std::cout << to_string(v.status) << " witness: " << hrs::render_kmer(v.witness->first)
              << " " << hrs::render_kmer(v.witness->second) << "\n";
  } else if (v.status == hrs::Status::Inconclusive && !v.reason.empty()) {
    std::cout << to_string(v.status) << " (" << v.reason << ")\n";
  } else {
    std::cout << to_string(v.status) << "\n";
  }
  if (as_json) {
    json j;
    j["status"] = to_string(v.status);
    j["method"] = v.method;
    if (v.witness)
      j["witness"] = {hrs::render_kmer(v.witness->first), hrs::render_kmer(v.witness->second)};
    if (!v.reason.empty()) j["reason"] = v.reason;
    j["seconds"] = v.seconds;
    j["work"] = v.work;
    std::cout << j.dump(2) << "\n";
  }
}

int exit_code_for(hrs::Status s) {
  switch (s) {
    case hrs::Status::Resolving: return kExitResolving;
    case hrs::Status::NotResolving: return kExitNotResolving;
    default: return kExitInconclusive;
  }
}

struct VerifyArgs {
  std::string set_path;
  std::string method = "auto";
  std::string mode = "exact";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget_nodes;
  int workers = 1;
  bool as_json = false;
};

hrs::Verdict dispatch_verify(const std::vector<hrs::Kmer>& kmers, const VerifyArgs& a) {
  const hrs::HammingInstance inst = kmers.front().instance;

  auto run_ilp = [&](hrs::ObjectiveMode mode) {
    hrs::IlpOptions opts;
    opts.mode = mode;
    if (mode != hrs::ObjectiveMode::PowersOfTwo) opts.seed = resolve_seed(a.seed);
    opts.node_budget = a.budget_nodes;
    return hrs::verify_ilp(kmers, opts);
  };

  if (a.method == "brute") return hrs::brute_force_verify(kmers);
  if (a.method == "groebner") return hrs::verify_groebner_parallel(kmers, a.workers);
  if (a.method == "ilp") return run_ilp(mode_from_flag(a.mode));
  if (a.method != "auto")
    throw CLI::ValidationError("--method", "expected auto|brute|groebner|ilp");

  // auto: brute force when the graph is small, otherwise an exact-ILP screen
  // with Groebner confirmation of a Resolving answer.
  if (inst.vertex_count_capped(10'000) <= 10'000) return hrs::brute_force_verify(kmers);
  hrs::Verdict screen = run_ilp(hrs::ObjectiveMode::PowersOfTwo);
  if (screen.status != hrs::Status::Resolving) return screen;
  hrs::Verdict confirmed = hrs::verify_groebner_parallel(kmers, a.workers);
  confirmed.method = screen.method + "+" + confirmed.method;
  return confirmed;
}

std::vector<hrs::HammingInstance> parse_instances(const std::string& spec_text) {
  std::vector<hrs::HammingInstance> out;
  std::stringstream ss(spec_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--instances", "expected k:a pairs, e.g. 2:2,3:3");
    out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  if (out.empty()) throw CLI::ValidationError("--instances", "no instances given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolving-set toolkit for Hamming graphs H_{k,a}"};
  app.require_subcommand(1);

  // ---- verify ----
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Decide whether a vertex set resolves H_{k,a}");
  verify->add_option("--set", va.set_path, "hrs-set v1 file")->required();
  verify->add_option("--method", va.method, "auto|brute|groebner|ilp (default auto)");
  verify->add_option("--mode", va.mode, "ILP objective: exact|feasibility|random-objective");
  verify->add_option("--seed", va.seed, "RNG seed (omit for a logged random seed)");
  verify->add_option("--budget-nodes", va.budget_nodes, "ILP node budget");
  verify->add_option("--workers", va.workers, "parallel Groebner workers (default 1)");
  verify->add_flag("--json", va.as_json, "emit a machine-readable JSON block");

  // ---- shrink ----
  struct {
    std::string set_path, out_path;
    int samples = 1000;
    std::optional<std::uint64_t> seed;
    std::string screen = "exact";
    bool no_confirm = false;
    int workers = 1;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> time_budget;
    bool as_json = false;
  } sa;
  auto* shr = app.add_subcommand("shrink", "Shrink a resolving set by sampled binary search");
  shr->add_option("--set", sa.set_path, "hrs-set v1 file (must resolve)")->required();
  shr->add_option("--out", sa.out_path, "write the shrunken set here");
  shr->add_option("--samples", sa.samples, "subsets tried per size (default 1000)");
  shr->add_option("--seed", sa.seed, "RNG seed");
  shr->add_option("--screen", sa.screen, "screening method: exact|feasibility");
  shr->add_flag("--no-confirm", sa.no_confirm, "skip the final Groebner confirmation");
  shr->add_option("--workers", sa.workers, "parallel screening workers");
  shr->add_option("--budget-nodes", sa.budget_nodes, "ILP node budget per screen");
  shr->add_option("--time-budget", sa.time_budget, "wall-clock budget in seconds");
  shr->add_flag("--json", sa.as_json, "emit a machine-readable JSON block");

  // ---- embed ----
  struct {
    std::string basis = hrs::kShippedBasisName;
    std::string in_path, out_path;
  } ea;
  auto* emb = app.add_subcommand("embed", "Embed sequences as distance vectors to a basis set");
  emb->add_option("--basis", ea.basis, "'shipped-octapeptide-77' or an hrs-set file");
  emb->add_option("--in", ea.in_path, "input file, one sequence per line")->required();
  emb->add_option("--out", ea.out_path, "output CSV")->required();

  // ---- bench ----
  struct {
    std::string instances = "2:2";
    int n_res = 50, n_non = 50, replicates = 5;
    std::string methods = "brute,groebner,ilp-exact";
    std::optional<std::uint64_t> seed;
    std::string records = "records.csv", summary = "summary.csv";
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> time_cap;
  } ba;
  auto* ben = app.add_subcommand("bench", "Time each verification method on random labeled sets");
  ben->add_option("--instances", ba.instances, "comma-separated k:a pairs (default 2:2)");
  ben->add_option("--n-resolving", ba.n_res, "resolving sets per instance (default 50)");
  ben->add_option("--n-non-resolving", ba.n_non, "non-resolving sets per instance (default 50)");
  ben->add_option("--replicates", ba.replicates, "timed replicates per set (default 5)");
  ben->add_option("--methods", ba.methods,
                  "comma-separated subset of brute,groebner,ilp-exact,ilp-feasibility");
  ben->add_option("--seed", ba.seed, "RNG seed");
  ben->add_option("--records", ba.records, "per-run CSV path (default records.csv)");
  ben->add_option("--summary", ba.summary, "per-cell CSV path (default summary.csv)");
  ben->add_option("--budget-nodes", ba.budget_nodes, "ILP node budget");
  ben->add_option("--time-cap", ba.time_cap, "per-run time cap in seconds");

  // ---- mindim ----
  struct {
    int k = 1, a = 2;
    std::uint64_t cap = 64;
  } ma;
  auto* mind = app.add_subcommand("mindim", "Exact metric dimension of a tiny H_{k,a}");
  mind->add_option("--k", ma.k, "word length")->required();
  mind->add_option("--a", ma.a, "alphabet size")->required();
  mind->add_option("--cap", ma.cap, "vertex-count cap (default 64)");

  // ---- export-ilp ----
  struct {
    std::string set_path, out_path, mode = "exact";
    std::optional<std::uint64_t> seed;
    bool classic = false;
    int k = 0, a = 0;
  } xa;
  auto* exp = app.add_subcommand("export-ilp", "Write an LP-format integer program");
  exp->add_option("--set", xa.set_path, "hrs-set file (membership model)");
  exp->add_option("--out", xa.out_path, "output .lp path")->required();
  exp->add_option("--mode", xa.mode, "objective: exact|feasibility|random-objective");
  exp->add_option("--seed", xa.seed, "RNG seed for drawn objectives");
  exp->add_flag("--classic", xa.classic, "export the minimal-resolving-set covering model");
  exp->add_option("--k", xa.k, "word length (with --classic)");
  exp->add_option("--a", xa.a, "alphabet size (with --classic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      hrs::VertexSet set = hrs::read_set_file(va.set_path);
      if (set.kmers.empty()) throw hrs::EmptySet("verify: empty set in " + va.set_path);
      hrs::Verdict v = dispatch_verify(set.kmers, va);
      print_verdict(v, va.as_json);
      return exit_code_for(v.status);
    }

    if (shr->parsed()) {
      hrs::VertexSet set = hrs::read_set_file(sa.set_path);
      hrs::ShrinkConfig cfg;
      cfg.samples_per_size = sa.samples;
      cfg.seed = resolve_seed(sa.seed);
      cfg.screen_method = sa.screen == "feasibility" ? hrs::ScreenMethod::IlpFeasibility
                                                     : hrs::ScreenMethod::IlpExact;
      cfg.confirm_with_groebner = !sa.no_confirm;
      cfg.workers = sa.workers;
      cfg.node_budget = sa.budget_nodes;
      cfg.time_budget_seconds = sa.time_budget;
      hrs::ShrinkTrace trace;
      try {
        trace = hrs::shrink(set.kmers, cfg);
      } catch (const hrs::InputNotResolving& e) {
        std::cout << "NOT RESOLVING (" << e.what() << ")\n";
        return kExitNotResolving;
      }
      std::cout << trace.to_log();
      if (!sa.out_path.empty())
        hrs::write_set_file(sa.out_path, {set.instance, trace.final_set});
      if (sa.as_json) {
        json j;
        j["final_size"] = trace.final_set.size();
        j["confirmed"] = trace.confirmed;
        j["budget_hit"] = trace.budget_hit;
        std::vector<std::string> members;
        for (const hrs::Kmer& v : trace.final_set) members.push_back(hrs::render_kmer(v));
        j["set"] = members;
        std::cout << j.dump(2) << "\n";
      }
      if (trace.budget_hit) return kExitInconclusive;
      if (cfg.confirm_with_groebner && !trace.confirmed) return kExitInconclusive;
      return kExitResolving;
    }

    if (emb->parsed()) {
      hrs::EmbeddingBasis basis = hrs::load_basis(ea.basis);
      std::uint64_t n = hrs::embed_file(ea.in_path, basis, ea.out_path);
      std::cout << "embedded " << n << " sequences into dimension " << basis.dimension()
                << "\n";
      return kExitResolving;
    }

    if (ben->parsed()) {
      hrs::BenchConfig cfg;
      cfg.instances = parse_instances(ba.instances);
      cfg.n_resolving = ba.n_res;
      cfg.n_non_resolving = ba.n_non;
      cfg.replicates = ba.replicates;
      cfg.methods.clear();
      std::stringstream ms(ba.methods);
      std::string m;
      while (std::getline(ms, m, ','))
        if (!m.empty()) cfg.methods.push_back(hrs::bench_method_from_name(m));
      cfg.seed = resolve_seed(ba.seed);
      cfg.ilp_node_budget = ba.budget_nodes;
      cfg.per_run_time_cap_seconds = ba.time_cap;
      hrs::BenchResult result = hrs::run_bench(cfg);
      std::ofstream rec(ba.records);
      if (!rec) throw hrs::IoError("cannot open " + ba.records);
      hrs::write_records_csv(rec, result);
      std::ofstream sum(ba.summary);
      if (!sum) throw hrs::IoError("cannot open " + ba.summary);
      hrs::write_summary_csv(sum, result);
      std::cout << result.records.size() << " records -> " << ba.records << ", "
                << ba.summary << "\n";
      return kExitResolving;
    }

    if (mind->parsed()) {
      hrs::HammingInstance inst(ma.k, ma.a);
      auto [beta, witness] = hrs::metric_dimension_exhaustive(inst, ma.cap);
      std::cout << "beta = " << beta << "\n";
      std::cout << "witness:";
      for (const hrs::Kmer& v : witness) std::cout << " " << hrs::render_kmer(v);
      std::cout << "\n";
      return kExitResolving;
    }

    if (exp->parsed()) {
      std::ofstream out(xa.out_path);
      if (!out) throw hrs::IoError("cannot open " + xa.out_path);
      if (xa.classic) {
        if (xa.k <= 0 || xa.a <= 1)
          throw CLI::ValidationError("--classic", "needs --k and --a");
        hrs::ClassicModel model = hrs::build_classic_min_model(hrs::HammingInstance(xa.k, xa.a));
        hrs::write_lp(out, hrs::classic_to_generic(model));
      } else {
        if (xa.set_path.empty())
          throw CLI::ValidationError("--set", "required without --classic");
        hrs::VertexSet set = hrs::read_set_file(xa.set_path);
        hrs::ObjectiveMode mode = mode_from_flag(xa.mode);
        std::optional<std::uint64_t> seed;
        if (mode != hrs::ObjectiveMode::PowersOfTwo) seed = resolve_seed(xa.seed);
        hrs::IlpModel model = hrs::build_membership_model(set.kmers, mode, seed);
        hrs::write_lp(out, hrs::to_generic(model));
      }
      std::cout << "wrote " << xa.out_path << "\n";
      return kExitResolving;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hrs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
