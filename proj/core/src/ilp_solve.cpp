#include <algorithm>
#include <cmath>
#include <numeric>

#include "hrs/ilp.hpp"

namespace hrs {

namespace {

// A block pattern is zero, or +1 at p / -1 at q within the block.
struct Pattern {
  int plus = -1;   // -1 means the zero pattern
  int minus = -1;
};

struct Searcher {
  const IlpModel& model;
  int k, a, d, n;
  std::vector<int> block_order;            // static, most-constrained first
  std::vector<std::vector<Pattern>> pats;  // per block (original index)
  std::vector<int> residual;               // per A-row
  std::vector<int> z;
  std::uint64_t nodes = 0;
  std::optional<std::uint64_t> budget;
  bool exhausted = false;
  bool use_cut;                          // feasibility mode: require <c,z> <= -delta
  bool symmetry_break;                   // first nonzero block in search order has plus < minus
  std::vector<double> cut_min_suffix;    // attainable minimum of remaining blocks' c-contribution
  double cut_value = 0.0;
  std::vector<int> found;

  explicit Searcher(const IlpModel& m, std::optional<std::uint64_t> node_budget)
      : model(m),
        k(m.instance.k),
        a(m.instance.a),
        d(m.var_count()),
        n(static_cast<int>(m.A.size())),
        residual(m.A.size(), 0),
        z(static_cast<std::size_t>(m.var_count()), 0),
        budget(node_budget),
        use_cut(m.mode == ObjectiveMode::FeasibilityThreshold),
        symmetry_break(m.mode != ObjectiveMode::FeasibilityThreshold) {
    pats.resize(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) {
      auto& list = pats[static_cast<std::size_t>(b)];
      list.push_back({});  // zero pattern first keeps the search deterministic
      for (int p = 0; p < a; ++p)
        for (int q = 0; q < a; ++q)
          if (p != q) list.push_back({p, q});
    }

    // Most-constrained blocks first: more distinct symbols among R at a
    // coordinate means more patterns hit an A-row.
    std::vector<int> distinct(static_cast<std::size_t>(k), 0);
    for (int b = 0; b < k; ++b) {
      std::vector<char> seen(static_cast<std::size_t>(a), 0);
      for (const Kmer& v : model.source_set) seen[static_cast<std::size_t>(v.symbols[static_cast<std::size_t>(b)])] = 1;
      distinct[static_cast<std::size_t>(b)] =
          static_cast<int>(std::count(seen.begin(), seen.end(), 1));
    }
    block_order.resize(static_cast<std::size_t>(k));
    std::iota(block_order.begin(), block_order.end(), 0);
    std::stable_sort(block_order.begin(), block_order.end(),
                     [&](int x, int y) { return distinct[static_cast<std::size_t>(x)] > distinct[static_cast<std::size_t>(y)]; });

    if (use_cut) {
      // Per-block minimum of the c-contribution over all patterns, then
      // suffix sums along the search order.
      std::vector<double> bmin(static_cast<std::size_t>(k), 0.0);
      for (int b = 0; b < k; ++b) {
        double m0 = 0.0;
        for (const Pattern& pt : pats[static_cast<std::size_t>(b)]) {
          if (pt.plus < 0) continue;
          double v = model.c[static_cast<std::size_t>(b * a + pt.plus)] -
                     model.c[static_cast<std::size_t>(b * a + pt.minus)];
          m0 = std::min(m0, v);
        }
        bmin[static_cast<std::size_t>(b)] = m0;
      }
      cut_min_suffix.assign(static_cast<std::size_t>(k) + 1, 0.0);
      for (int t = k - 1; t >= 0; --t)
        cut_min_suffix[static_cast<std::size_t>(t)] =
            cut_min_suffix[static_cast<std::size_t>(t) + 1] +
            bmin[static_cast<std::size_t>(block_order[static_cast<std::size_t>(t)])];
    }
  }

  // Contribution of pattern pt in block b to A-row r.
  int row_delta(int r, int b, const Pattern& pt) const {
    if (pt.plus < 0) return 0;
    const auto& row = model.A[static_cast<std::size_t>(r)];
    return row[static_cast<std::size_t>(b * a + pt.plus)] -
           row[static_cast<std::size_t>(b * a + pt.minus)];
  }

  bool dfs(int depth, bool all_zero_so_far) {
    if (depth == k) {
      for (int r = 0; r < n; ++r)
        if (residual[static_cast<std::size_t>(r)] != 0) return false;
      if (all_zero_so_far) return false;  // nonzero z required
      if (use_cut && cut_value > -model.delta + 1e-12) return false;
      found = z;
      return true;
    }
    const int b = block_order[static_cast<std::size_t>(depth)];
    const int remaining = k - depth - 1;
    for (const Pattern& pt : pats[static_cast<std::size_t>(b)]) {
      if (budget && nodes >= *budget) {
        exhausted = true;
        return false;
      }
      ++nodes;
      if (symmetry_break && all_zero_so_far && pt.plus >= 0 && pt.plus > pt.minus)
        continue;  // -z is feasible whenever z is; search one orientation
      bool ok = true;
      for (int r = 0; r < n; ++r) {
        int nr = residual[static_cast<std::size_t>(r)] + row_delta(r, b, pt);
        if (std::abs(nr) > remaining) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      double dcut = 0.0;
      if (use_cut) {
        if (pt.plus >= 0)
          dcut = model.c[static_cast<std::size_t>(b * a + pt.plus)] -
                 model.c[static_cast<std::size_t>(b * a + pt.minus)];
        double best_possible =
            cut_value + dcut + cut_min_suffix[static_cast<std::size_t>(depth) + 1];
        if (best_possible > -model.delta + 1e-12) continue;
        cut_value += dcut;
      }
      for (int r = 0; r < n; ++r)
        residual[static_cast<std::size_t>(r)] += row_delta(r, b, pt);
      if (pt.plus >= 0) {
        z[static_cast<std::size_t>(b * a + pt.plus)] = 1;
        z[static_cast<std::size_t>(b * a + pt.minus)] = -1;
      }
      bool hit = dfs(depth + 1, all_zero_so_far && pt.plus < 0);
      if (pt.plus >= 0) {
        z[static_cast<std::size_t>(b * a + pt.plus)] = 0;
        z[static_cast<std::size_t>(b * a + pt.minus)] = 0;
      }
      for (int r = 0; r < n; ++r)
        residual[static_cast<std::size_t>(r)] -= row_delta(r, b, pt);
      if (use_cut) cut_value -= dcut;
      if (hit || exhausted) return hit;
    }
    return false;
  }
};

Rational powers_objective(const std::vector<int>& z) {
  BigInt total = 0;
  BigInt coeff = 2;  // c_j = 2^j with j starting at 1
  for (int v : z) {
    if (v != 0) total += coeff * v;
    coeff <<= 1;
  }
  return Rational(total);
}

}  // namespace

SolveOutcome solve_exact(const IlpModel& model, std::optional<std::uint64_t> node_budget) {
  if (model.A.empty()) throw Error("solve_exact: model has no constraint rows");
  if (model.mode != ObjectiveMode::PowersOfTwo &&
      model.c.size() != static_cast<std::size_t>(model.var_count()))
    throw Error("solve_exact: malformed model (missing coefficients)");

  Searcher s(model, node_budget);
  bool hit = s.dfs(0, true);

  SolveOutcome out;
  out.nodes_explored = s.nodes;
  if (hit) {
    out.z = s.found;
    switch (model.mode) {
      case ObjectiveMode::PowersOfTwo: {
        Rational obj = powers_objective(*out.z);
        if (obj > 0) {  // report the negative orientation
          for (int& v : *out.z) v = -v;
          obj = -obj;
        }
        out.objective_value = obj;
        out.status = SolveOutcome::St::NegativeOptimum;
        break;
      }
      case ObjectiveMode::RandomNormal: {
        double obj = 0.0;
        for (int j = 0; j < model.var_count(); ++j)
          obj += model.c[static_cast<std::size_t>(j)] * (*out.z)[static_cast<std::size_t>(j)];
        if (obj > 0) {
          for (int& v : *out.z) v = -v;
          obj = -obj;
        }
        out.objective_value = Rational(obj);
        out.status = SolveOutcome::St::NegativeOptimum;
        break;
      }
      case ObjectiveMode::FeasibilityThreshold:
        out.status = SolveOutcome::St::Feasible;
        break;
    }
  } else if (s.exhausted) {
    out.status = SolveOutcome::St::BudgetExhausted;
  } else if (model.mode == ObjectiveMode::FeasibilityThreshold) {
    out.status = SolveOutcome::St::Infeasible;
  } else {
    out.status = SolveOutcome::St::ZeroOptimum;
    out.objective_value = Rational(0);
  }
  return out;
}

std::pair<Kmer, Kmer> decode_witness(const std::vector<int>& z,
                                     const HammingInstance& instance) {
  auto pair = difference_to_pair(z, instance);
  if (!pair)
    throw NotAWitness("vector is not a nonzero blockwise difference of canonical vectors");
  return *pair;
}

}  // namespace hrs
