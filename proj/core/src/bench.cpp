#include "hrs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "hrs/groebner_verify.hpp"
#include "hrs/ilp.hpp"
#include "hrs/oracle.hpp"
#include "hrs/rng.hpp"

namespace hrs {

const char* to_string(BenchMethod m) {
  switch (m) {
    case BenchMethod::Brute: return "brute";
    case BenchMethod::Groebner: return "groebner";
    case BenchMethod::IlpExact: return "ilp-exact";
    case BenchMethod::IlpFeasibility: return "ilp-feasibility";
  }
  return "?";
}

BenchMethod bench_method_from_name(const std::string& name) {
  if (name == "brute") return BenchMethod::Brute;
  if (name == "groebner") return BenchMethod::Groebner;
  if (name == "ilp-exact") return BenchMethod::IlpExact;
  if (name == "ilp-feasibility") return BenchMethod::IlpFeasibility;
  throw ParseError("unknown bench method: " + name);
}

std::vector<LabeledSet> generate_test_sets(const HammingInstance& instance, int n_res,
                                           int n_non, std::uint64_t seed,
                                           std::uint64_t draw_cap) {
  const std::uint64_t n_nodes = instance.vertex_count_capped(10'000'000);
  if (n_nodes > 10'000'000)
    throw InstanceTooLarge("generate_test_sets: instance exceeds the brute-force cap");

  // Size ceiling: the metric-dimension upper bound (k-1)*floor(a/2)+(a-1),
  // plus 2 so sets on either side of the threshold occur.
  int max_size = (instance.k - 1) * (instance.a / 2) + (instance.a - 1) + 2;
  max_size = std::min<int>(max_size, static_cast<int>(n_nodes));
  max_size = std::max(max_size, 1);

  Rng rng(seed);
  std::vector<LabeledSet> out;
  int have_res = 0, have_non = 0;
  std::uint64_t draws = 0;
  while (have_res < n_res || have_non < n_non) {
    if (draws++ >= draw_cap) {
      const char* starved = (have_res < n_res) ? "resolving" : "non-resolving";
      throw QuotaUnreachable(std::string("generate_test_sets: draw cap hit before the ") +
                             starved + " quota filled");
    }
    const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
    // Uniform s-subset of the vertex set via partial Fisher-Yates on indices.
    std::set<std::uint64_t> chosen;
    std::vector<std::uint64_t> picks;
    while (static_cast<int>(picks.size()) < s) {
      std::uint64_t v = rng.below(n_nodes);
      if (chosen.insert(v).second) picks.push_back(v);
    }
    std::sort(picks.begin(), picks.end());
    std::vector<Kmer> kmers;
    kmers.reserve(picks.size());
    for (std::uint64_t v : picks) kmers.push_back(kmer_from_index(v, instance));

    const bool res = brute_force_verify(kmers).status == Status::Resolving;
    if (res) {
      if (have_res >= n_res) continue;
      ++have_res;
    } else {
      if (have_non >= n_non) continue;
      ++have_non;
    }
    LabeledSet ls;
    ls.kmers = std::move(kmers);
    ls.resolving = res;
    ls.set_id = static_cast<int>(out.size());
    out.push_back(std::move(ls));
  }
  return out;
}

namespace {

struct TimedVerdict {
  Verdict verdict;
  double seconds = 0.0;
  double model_build_seconds = 0.0;
};

TimedVerdict run_one(const LabeledSet& set, BenchMethod method, const BenchConfig& cfg,
                     std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  TimedVerdict tv;
  auto t0 = clock::now();
  switch (method) {
    case BenchMethod::Brute:
      tv.verdict = brute_force_verify(set.kmers);
      break;
    case BenchMethod::Groebner:
      tv.verdict = verify_groebner(set.kmers);
      break;
    case BenchMethod::IlpExact:
    case BenchMethod::IlpFeasibility: {
      IlpOptions opts;
      opts.mode = method == BenchMethod::IlpExact ? ObjectiveMode::PowersOfTwo
                                                  : ObjectiveMode::FeasibilityThreshold;
      if (opts.mode == ObjectiveMode::FeasibilityThreshold) opts.seed = seed;
      if (cfg.ilp_node_budget) opts.node_budget = *cfg.ilp_node_budget;
      // Model construction timed separately; the verify call rebuilds it, so
      // the build share of the total is measured on its own first.
      auto b0 = clock::now();
      build_membership_model(set.kmers, opts.mode,
                             opts.mode == ObjectiveMode::FeasibilityThreshold
                                 ? opts.seed
                                 : std::optional<std::uint64_t>{});
      tv.model_build_seconds = std::chrono::duration<double>(clock::now() - b0).count();
      t0 = clock::now();
      tv.verdict = verify_ilp(set.kmers, opts);
      break;
    }
  }
  tv.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return tv;
}

}  // namespace

BenchResult run_bench(const BenchConfig& cfg) {
  BenchResult result;
  for (const HammingInstance& inst : cfg.instances) {
    const std::uint64_t n_nodes = inst.vertex_count_capped(10'000'000);
    std::uint64_t set_seed = cfg.seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(inst.k) << 8 | static_cast<std::uint64_t>(inst.a)));
    auto sets = generate_test_sets(inst, cfg.n_resolving, cfg.n_non_resolving, set_seed);
    for (const LabeledSet& set : sets) {
      for (BenchMethod method : cfg.methods) {
        for (int rep = 0; rep < cfg.replicates; ++rep) {
          TimedVerdict tv =
              run_one(set, method, cfg,
                      set_seed + 977u * static_cast<std::uint64_t>(set.set_id) + static_cast<std::uint64_t>(rep));
          BenchRecord rec;
          rec.k = inst.k;
          rec.a = inst.a;
          rec.n_nodes = n_nodes;
          rec.set_id = set.set_id;
          rec.set_size = static_cast<int>(set.kmers.size());
          rec.truth_resolving = set.resolving;
          rec.method = method;
          rec.verdict = tv.verdict.status;
          rec.agrees = (tv.verdict.status == Status::Resolving) == set.resolving &&
                       tv.verdict.status != Status::Inconclusive;
          rec.time_seconds = tv.seconds;
          rec.model_build_seconds = tv.model_build_seconds;
          rec.replicate = rep;
          if (cfg.per_run_time_cap_seconds && tv.seconds > *cfg.per_run_time_cap_seconds)
            rec.verdict = Status::Inconclusive;  // timeout recorded, not fatal
          result.records.push_back(rec);
        }
      }
    }
  }
  return result;
}

void write_records_csv(std::ostream& out, const BenchResult& result) {
  out << "# set sizes drawn uniformly from 1..(k-1)*floor(a/2)+(a-1)+2;\n"
      << "# non-resolving sets are not size-matched to resolving ones.\n"
      << "# agrees is NA when the verdict is INCONCLUSIVE.\n";
  out << "k,a,n_nodes,set_id,set_size,truth_label,method,verdict,agrees,"
         "time_seconds,model_build_seconds,replicate\n";
  for (const BenchRecord& r : result.records) {
    out << r.k << ',' << r.a << ',' << r.n_nodes << ',' << r.set_id << ',' << r.set_size
        << ',' << (r.truth_resolving ? "RESOLVING" : "NOT RESOLVING") << ','
        << to_string(r.method) << ',' << to_string(r.verdict) << ','
        << (r.verdict == Status::Inconclusive ? "NA" : (r.agrees ? "1" : "0")) << ','
        << r.time_seconds << ',' << r.model_build_seconds << ',' << r.replicate << "\n";
  }
}

void write_summary_csv(std::ostream& out, const BenchResult& result) {
  std::map<std::tuple<int, int, std::string>, std::vector<double>> cells;
  std::map<std::tuple<int, int, std::string>, std::uint64_t> nodes;
  for (const BenchRecord& r : result.records) {
    auto key = std::make_tuple(r.k, r.a, std::string(to_string(r.method)));
    cells[key].push_back(r.time_seconds);
    nodes[key] = r.n_nodes;
  }
  out << "k,a,n_nodes,method,mean_s,sd_s\n";
  for (const auto& [key, times] : cells) {
    const auto& [k, a, method] = key;
    double mean = 0.0;
    for (double t : times) mean += t;
    mean /= static_cast<double>(times.size());
    double var = 0.0;
    for (double t : times) var += (t - mean) * (t - mean);
    double sd = times.size() > 1 ? std::sqrt(var / static_cast<double>(times.size() - 1)) : 0.0;
    out << k << ',' << a << ',' << nodes.at(key) << ',' << method << ',' << mean << ','
        << sd << "\n";
  }
}

}  // namespace hrs
