#include "hrs/shrink.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "hrs/groebner_verify.hpp"
#include "hrs/ilp.hpp"
#include "hrs/oracle.hpp"
#include "hrs/rng.hpp"

namespace hrs {

std::string ShrinkTrace::to_log() const {
  std::ostringstream out;
  out << "# shrink trace (subsets re-anchored to the current best set;\n";
  out << "# free-subset interpretation of the sampling is not used)\n";
  for (const ShrinkStep& s : steps)
    out << "step L=" << s.lower << " U=" << s.upper << " s=" << s.size
        << " tried=" << s.subsets_tried << " found=" << (s.found_resolving ? 1 : 0)
        << "\n";
  out << "final size=" << final_set.size() << " confirmed=" << (confirmed ? 1 : 0)
      << "\n";
  return out.str();
}

std::vector<std::vector<Kmer>> sample_subsets(const std::vector<Kmer>& R, int s,
                                              int n, std::uint64_t seed) {
  const int m = static_cast<int>(R.size());
  if (s < 1 || s > m) throw BadSize("sample_subsets: need 1 <= s <= |R|");
  if (n < 1) throw BadSize("sample_subsets: need n >= 1");

  // C(m, s), saturating at n+1 (only the comparison with n matters).
  std::uint64_t total = 1;
  for (int i = 0; i < s && total <= static_cast<std::uint64_t>(n); ++i) {
    total = total * static_cast<std::uint64_t>(m - i) / static_cast<std::uint64_t>(i + 1);
  }

  std::vector<std::vector<Kmer>> out;
  if (total <= static_cast<std::uint64_t>(n)) {
    // Few enough: enumerate every s-subset in lexicographic index order.
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<Kmer> sub;
      for (int i : idx) sub.push_back(R[static_cast<std::size_t>(i)]);
      out.push_back(std::move(sub));
      int pos = s - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - (s - pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int t = pos + 1; t < s; ++t)
        idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
  }

  Rng rng(seed);
  std::set<std::vector<int>> seen;
  std::vector<int> pool(static_cast<std::size_t>(m));
  long attempts = 0;
  const long attempt_cap = 50L * n + 1000;
  while (static_cast<int>(out.size()) < n && attempts++ < attempt_cap) {
    std::iota(pool.begin(), pool.end(), 0);
    // Fisher-Yates prefix of length s.
    for (int i = 0; i < s; ++i) {
      int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> idx(pool.begin(), pool.begin() + s);
    std::sort(idx.begin(), idx.end());
    if (!seen.insert(idx).second) continue;
    std::vector<Kmer> sub;
    for (int i : idx) sub.push_back(R[static_cast<std::size_t>(i)]);
    out.push_back(std::move(sub));
  }
  return out;
}

namespace {

bool screen_subset(const std::vector<Kmer>& subset, const ShrinkConfig& cfg,
                   std::uint64_t seed) {
  IlpOptions opts;
  opts.node_budget = cfg.node_budget;
  if (cfg.screen_method == ScreenMethod::IlpFeasibility) {
    opts.mode = ObjectiveMode::FeasibilityThreshold;
    opts.seed = seed;
  } else {
    opts.mode = ObjectiveMode::PowersOfTwo;
  }
  Verdict v = verify_ilp(subset, opts);
  if (v.status == Status::Resolving) return true;
  // The feasibility screen can never prove resolvability; delta-infeasibility
  // is its heuristic pass, vindicated by the final Groebner confirmation.
  // Budget exhaustion always counts as a failed screen, keeping the current
  // best set resolving under the screen's own standard.
  if (cfg.screen_method == ScreenMethod::IlpFeasibility &&
      v.status == Status::Inconclusive && v.reason.find("delta") != std::string::npos)
    return true;
  return false;
}

}  // namespace

ShrinkTrace shrink(const std::vector<Kmer>& R, const ShrinkConfig& cfg) {
  if (cfg.samples_per_size < 1) throw BadSize("shrink: samples_per_size must be >= 1");
  std::vector<Kmer> best = dedupe(R, /*warn=*/false);
  if (best.empty()) throw EmptySet("shrink: empty input set");
  const HammingInstance inst = best.front().instance;

  if (cfg.precheck_with_oracle && inst.vertex_count_capped(10'000) <= 10'000) {
    if (brute_force_verify(best).status != Status::Resolving)
      throw InputNotResolving("shrink: input set does not resolve the graph");
  }

  auto t0 = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return cfg.time_budget_seconds &&
           std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
               *cfg.time_budget_seconds;
  };

  ShrinkTrace trace;
  int lower = 1, upper = static_cast<int>(best.size());
  std::uint64_t step_no = 0;

  while (lower < upper - 1) {
    const int s = (lower + upper) / 2;
    auto subsets = sample_subsets(best, s, cfg.samples_per_size, cfg.seed + 0x5e7 * ++step_no);

    ShrinkStep step;
    step.lower = lower;
    step.upper = upper;
    step.size = s;

    int found_at = -1;
    const int workers = std::max(1, cfg.workers);
    for (std::size_t base = 0; base < subsets.size() && found_at < 0; base += static_cast<std::size_t>(workers)) {
      if (out_of_time()) {
        trace.budget_hit = true;
        break;
      }
      std::size_t wave_end = std::min(subsets.size(), base + static_cast<std::size_t>(workers));
      std::vector<std::future<bool>> wave;
      for (std::size_t i = base; i < wave_end; ++i)
        wave.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                  screen_subset, std::cref(subsets[i]), std::cref(cfg),
                                  cfg.seed + 31 * step_no + i));
      // Results consumed in sample order: the accepted subset is the one with
      // the smallest index, independent of worker count.
      for (std::size_t i = base; i < wave_end; ++i) {
        bool ok = wave[i - base].get();
        ++step.subsets_tried;
        if (ok && found_at < 0) found_at = static_cast<int>(i);
      }
    }
    if (trace.budget_hit) {
      trace.steps.push_back(step);
      break;
    }
    if (found_at >= 0) {
      step.found_resolving = true;
      best = subsets[static_cast<std::size_t>(found_at)];
      upper = s;
    } else {
      lower = s;
    }
    trace.steps.push_back(step);
  }

  trace.final_set = best;
  if (!trace.budget_hit && cfg.confirm_with_groebner) {
    trace.confirmed =
        verify_groebner_parallel(best, std::max(1, cfg.workers)).status == Status::Resolving;
  }
  return trace;
}

}  // namespace hrs
