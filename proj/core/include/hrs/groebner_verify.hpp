#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hrs/constraints.hpp"
#include "hrs/verdict.hpp"

namespace hrs {

struct GroebnerOptions {
  int workers = 1;
  // When set, receives (i, basis) for each processed auxiliary level: the
  // reduced Groebner basis, or the generator system when the level was
  // settled by a grid-root certificate instead. Enables an external audit.
  std::function<void(int, const std::vector<Polynomial>&)> transcript;
};

/// Nullstellensatz check: R resolves iff for every i in 1..k the reduced
/// Groebner basis of {rows of A} u P u {f - 2i} is {1}. Since the system
/// contains z^3 - z for every variable, its variety lies in {-1,0,1}^dim,
/// so a level can also be certified nontrivial by exhibiting a common root
/// on that grid; the verifier combines both certificates.
Verdict verify_groebner(const std::vector<Kmer>& R, const GroebnerOptions& opts = {});

Verdict verify_groebner_parallel(const std::vector<Kmer>& R, int worker_count);

/// Best-effort common-root search over the candidate grid {-1, 0, 1}^dim by
/// back-substitution; gives up (nullopt) after step_cap search steps, so a
/// miss only means "none found within budget".
std::optional<std::vector<int>> extract_root(const std::vector<Polynomial>& basis,
                                             int dim, long step_cap = 2'000'000);

/// Evaluate p at an integer point (exact arithmetic).
Rational evaluate(const Polynomial& p, const std::vector<int>& z);

}  // namespace hrs
