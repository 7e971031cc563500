#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hrs/kmer.hpp"
#include "hrs/polynomial.hpp"
#include "hrs/verdict.hpp"

namespace hrs {

enum class ObjectiveMode { PowersOfTwo, RandomNormal, FeasibilityThreshold };

ObjectiveMode objective_mode_from_name(const std::string& name);

/// The membership model of the resolvability check: integer z in {-1,0,1}^ak
/// with Az = 0, per-block zero sum, and per-block L1 at most 2. A nonzero
/// feasible point is a certificate of non-resolvability.
struct IlpModel {
  HammingInstance instance;
  std::vector<std::vector<std::int8_t>> A;  // n x ak
  std::vector<Kmer> source_set;
  ObjectiveMode mode = ObjectiveMode::PowersOfTwo;
  std::vector<double> c;   // drawn coefficients (RandomNormal / FeasibilityThreshold)
  double delta = 1e-3;     // FeasibilityThreshold only
  std::optional<std::uint64_t> seed;

  int block_count() const { return instance.k; }
  int var_count() const { return instance.a * instance.k; }
};

IlpModel build_membership_model(const std::vector<Kmer>& R, ObjectiveMode mode,
                                std::optional<std::uint64_t> seed = std::nullopt,
                                double delta = 1e-3);

struct SolveOutcome {
  enum class St { NegativeOptimum, ZeroOptimum, Feasible, Infeasible, BudgetExhausted };
  St status = St::Infeasible;
  std::optional<std::vector<int>> z;
  std::optional<Rational> objective_value;  // exact in PowersOfTwo mode
  std::uint64_t nodes_explored = 0;
};

/// Exact branch-and-bound over the a(a-1)+1 admissible patterns of each
/// block, pruning on running equality residuals. Complete: when it returns
/// ZeroOptimum / Infeasible, no nonzero feasible point exists.
SolveOutcome solve_exact(const IlpModel& model,
                         std::optional<std::uint64_t> node_budget = std::nullopt);

/// Decode a feasible nonzero z into the unresolved kmer pair it certifies.
std::pair<Kmer, Kmer> decode_witness(const std::vector<int>& z,
                                     const HammingInstance& instance);

struct IlpOptions {
  ObjectiveMode mode = ObjectiveMode::PowersOfTwo;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> node_budget;
  double delta = 1e-3;
  int max_redraws = 3;  // FeasibilityThreshold re-draw cap before Inconclusive
};

Verdict verify_ilp(const std::vector<Kmer>& R, const IlpOptions& opts = {});

// ---- LP-format export ------------------------------------------------------

struct GenericRow {
  std::string name;
  std::vector<std::pair<std::string, double>> terms;
  char sense = 'E';  // 'E' =, 'L' <=, 'G' >=
  double rhs = 0.0;

  bool operator==(const GenericRow&) const = default;
};

struct GenericIlp {
  std::string name;
  std::vector<std::pair<std::string, double>> objective;
  std::vector<GenericRow> rows;
  std::vector<std::tuple<std::string, double, double>> bounds;
  std::vector<std::string> generals;

  bool operator==(const GenericIlp&) const = default;
};

/// Affine form of the membership model (Remark-style reformulation with
/// auxiliary 0/1 w-variables standing in for |z_j|).
GenericIlp to_generic(const IlpModel& model);

void export_model(const IlpModel& model, const std::string& path);
void write_lp(std::ostream& out, const GenericIlp& ilp);
GenericIlp parse_lp(std::istream& in);

// ---- Classic minimal-resolving-set model (tiny scale) ----------------------

struct ClassicModel {
  HammingInstance instance;
  std::uint64_t n_vertices = 0;
  // covers[j] lists (pair-row index, |d(u,j)-d(v,j)|) for rows vertex j covers.
  std::vector<std::vector<std::pair<std::uint32_t, int>>> covers;
  std::uint32_t n_pairs = 0;
};

ClassicModel build_classic_min_model(const HammingInstance& instance,
                                     std::uint64_t size_cap = 64);

/// Exact optimum of the classic covering model: the metric dimension.
std::pair<int, std::vector<Kmer>> solve_classic_min(const ClassicModel& model);

GenericIlp classic_to_generic(const ClassicModel& model);

}  // namespace hrs
