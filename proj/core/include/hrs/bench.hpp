#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hrs/verdict.hpp"

namespace hrs {

struct LabeledSet {
  std::vector<Kmer> kmers;
  bool resolving = false;  // ground truth from the brute-force oracle
  int set_id = 0;
};

/// Uniform random subsets, size drawn from 1 to (k-1)*floor(a/2)+(a-1)+2
/// (the known upper bound on the metric dimension, plus slack so both labels
/// occur), labeled by brute force until both quotas fill.
std::vector<LabeledSet> generate_test_sets(const HammingInstance& instance, int n_res,
                                           int n_non, std::uint64_t seed,
                                           std::uint64_t draw_cap = 200'000);

enum class BenchMethod { Brute, Groebner, IlpExact, IlpFeasibility };

const char* to_string(BenchMethod m);
BenchMethod bench_method_from_name(const std::string& name);

struct BenchConfig {
  std::vector<HammingInstance> instances;
  int n_resolving = 50;
  int n_non_resolving = 50;
  int replicates = 5;
  std::vector<BenchMethod> methods = {BenchMethod::Brute, BenchMethod::Groebner,
                                      BenchMethod::IlpExact};
  std::uint64_t seed = 0;
  std::optional<double> per_run_time_cap_seconds;
  std::optional<std::uint64_t> ilp_node_budget;
};

struct BenchRecord {
  int k = 0, a = 0;
  std::uint64_t n_nodes = 0;
  int set_id = 0;
  int set_size = 0;
  bool truth_resolving = false;
  BenchMethod method = BenchMethod::Brute;
  Status verdict = Status::Inconclusive;
  bool agrees = false;
  double time_seconds = 0.0;
  double model_build_seconds = 0.0;
  int replicate = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
};

BenchResult run_bench(const BenchConfig& cfg);

/// records.csv: one row per set x method x replicate.
void write_records_csv(std::ostream& out, const BenchResult& result);
/// summary.csv: per-(k,a,method) mean and standard deviation.
void write_summary_csv(std::ostream& out, const BenchResult& result);

}  // namespace hrs
