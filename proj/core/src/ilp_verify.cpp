#include <chrono>

#include "hrs/ilp.hpp"

namespace hrs {

Verdict verify_ilp(const std::vector<Kmer>& R, const IlpOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  v.method = "ilp";

  auto finish = [&](Verdict& out) -> Verdict {
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  };

  auto report_witness = [&](const IlpModel& model, const std::vector<int>& z) {
    auto pair = decode_witness(z, model.instance);
    if (!witness_checks_out(pair, model.source_set))
      throw Error("internal: solver witness failed distance re-validation");
    v.status = Status::NotResolving;
    v.witness = pair;
  };

  if (opts.mode == ObjectiveMode::FeasibilityThreshold) {
    if (!opts.seed) throw MissingSeed("feasibility mode requires a seed");
    for (int draw = 0; draw < opts.max_redraws; ++draw) {
      IlpModel model =
          build_membership_model(R, opts.mode, *opts.seed + static_cast<std::uint64_t>(draw),
                                 opts.delta);
      SolveOutcome out = solve_exact(model, opts.node_budget);
      v.work += out.nodes_explored;
      if (out.status == SolveOutcome::St::Feasible) {
        report_witness(model, *out.z);
        return finish(v);
      }
      if (out.status == SolveOutcome::St::BudgetExhausted) {
        v.status = Status::Inconclusive;
        v.reason = "node budget exhausted";
        return finish(v);
      }
    }
    // Infeasible under every draw: delta may have cut off all certificates.
    v.status = Status::Inconclusive;
    v.reason = "feasibility cut at delta=" + std::to_string(opts.delta) +
               " infeasible after " + std::to_string(opts.max_redraws) + " draws";
    return finish(v);
  }

  IlpModel model = build_membership_model(R, opts.mode, opts.seed, opts.delta);
  SolveOutcome out = solve_exact(model, opts.node_budget);
  v.work = out.nodes_explored;
  switch (out.status) {
    case SolveOutcome::St::NegativeOptimum:
    case SolveOutcome::St::Feasible:
      report_witness(model, *out.z);
      break;
    case SolveOutcome::St::ZeroOptimum:
    case SolveOutcome::St::Infeasible:
      v.status = Status::Resolving;
      break;
    case SolveOutcome::St::BudgetExhausted:
      v.status = Status::Inconclusive;
      v.reason = "node budget exhausted";
      break;
  }
  return finish(v);
}

}  // namespace hrs
