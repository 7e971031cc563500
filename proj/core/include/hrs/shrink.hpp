#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hrs/verdict.hpp"

namespace hrs {

enum class ScreenMethod { IlpExact, IlpFeasibility };

struct ShrinkConfig {
  int samples_per_size = 1000;
  std::uint64_t seed = 0;
  ScreenMethod screen_method = ScreenMethod::IlpExact;
  bool confirm_with_groebner = true;
  int workers = 1;
  std::optional<double> time_budget_seconds;
  std::optional<std::uint64_t> node_budget;
  bool precheck_with_oracle = true;  // when a^k is small enough
};

struct ShrinkStep {
  int lower = 0, upper = 0, size = 0;
  int subsets_tried = 0;
  bool found_resolving = false;
};

struct ShrinkTrace {
  std::vector<ShrinkStep> steps;
  std::vector<Kmer> final_set;
  bool confirmed = false;    // Groebner confirmation ran and passed
  bool budget_hit = false;

  std::string to_log() const;
};

/// Binary search over subset sizes (s = floor((L+U)/2)); at each size up to
/// samples_per_size distinct random subsets of the current best set are
/// screened; a passing subset becomes the new best set and U <- s, otherwise
/// L <- s; stops when L = U-1.
ShrinkTrace shrink(const std::vector<Kmer>& R, const ShrinkConfig& cfg);

/// Deterministic uniform without-replacement s-subsets, deduplicated, at most
/// min(n, C(|R|, s)) of them.
std::vector<std::vector<Kmer>> sample_subsets(const std::vector<Kmer>& R, int s,
                                              int n, std::uint64_t seed);

}  // namespace hrs
