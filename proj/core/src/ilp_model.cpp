#include "hrs/ilp.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>

#include "hrs/rng.hpp"

namespace hrs {

ObjectiveMode objective_mode_from_name(const std::string& name) {
  if (name == "exact" || name == "powers-of-two") return ObjectiveMode::PowersOfTwo;
  if (name == "random-objective" || name == "random-normal") return ObjectiveMode::RandomNormal;
  if (name == "feasibility") return ObjectiveMode::FeasibilityThreshold;
  throw Error("unknown ILP mode '" + name + "'");
}

IlpModel build_membership_model(const std::vector<Kmer>& R, ObjectiveMode mode,
                                std::optional<std::uint64_t> seed, double delta) {
  if (R.empty()) throw EmptySet("build_membership_model: empty vertex set");
  ModelMatrix A = build_A(R, /*warn=*/false);
  IlpModel m;
  m.instance = A.instance;
  m.A = std::move(A.rows);
  m.source_set = std::move(A.source_set);
  m.mode = mode;
  m.delta = delta;
  m.seed = seed;
  if (mode != ObjectiveMode::PowersOfTwo) {
    if (!seed) throw MissingSeed("random coefficients require a seed");
    Rng rng(*seed);
    m.c.resize(static_cast<std::size_t>(m.var_count()));
    for (double& x : m.c) x = rng.gaussian();
  }
  return m;
}

ClassicModel build_classic_min_model(const HammingInstance& instance,
                                     std::uint64_t size_cap) {
  std::uint64_t n = instance.vertex_count_capped(size_cap);
  if (n > size_cap)
    throw InstanceTooLarge("classic model needs all pairwise distances; a^k exceeds cap " +
                           std::to_string(size_cap));
  ClassicModel m;
  m.instance = instance;
  m.n_vertices = n;
  m.covers.resize(n);

  std::vector<Kmer> verts;
  verts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) verts.push_back(kmer_from_index(i, instance));

  std::uint32_t row = 0;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) {
      for (std::uint64_t j = 0; j < n; ++j) {
        int diff = std::abs(hamming_distance(verts[u], verts[j]) -
                            hamming_distance(verts[v], verts[j]));
        if (diff > 0) m.covers[j].push_back({row, diff});
      }
      ++row;
    }
  }
  m.n_pairs = row;
  return m;
}

std::pair<int, std::vector<Kmer>> solve_classic_min(const ClassicModel& model) {
  const std::uint64_t n = model.n_vertices;
  const std::uint32_t pairs = model.n_pairs;

  // pair -> vertices covering it
  std::vector<std::vector<std::uint32_t>> covered_by(pairs);
  for (std::uint64_t j = 0; j < n; ++j)
    for (auto [p, coeff] : model.covers[j])
      covered_by[p].push_back(static_cast<std::uint32_t>(j));

  std::vector<int> cover_count(pairs, 0);
  std::vector<char> chosen(n, 0);
  std::vector<std::uint32_t> best_set;
  int best = static_cast<int>(n) + 1;
  std::size_t max_cover = 0;
  for (std::uint64_t j = 0; j < n; ++j) max_cover = std::max(max_cover, model.covers[j].size());

  std::uint32_t uncovered = pairs;
  std::vector<std::uint32_t> current;

  std::function<void()> dfs = [&] {
    if (uncovered == 0) {
      if (static_cast<int>(current.size()) < best) {
        best = static_cast<int>(current.size());
        best_set = current;
      }
      return;
    }
    int lb = static_cast<int>((uncovered + max_cover - 1) / max_cover);
    if (static_cast<int>(current.size()) + lb >= best) return;
    // Branch on the uncovered pair with fewest covering vertices.
    std::uint32_t pick = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::uint32_t p = 0; p < pairs; ++p) {
      if (cover_count[p] > 0) continue;
      if (covered_by[p].size() < fewest) {
        fewest = covered_by[p].size();
        pick = p;
      }
    }
    if (fewest == 0) return;  // unresolvable pair (cannot happen: the full set resolves)
    for (std::uint32_t j : covered_by[pick]) {
      if (chosen[j]) continue;
      chosen[j] = 1;
      current.push_back(j);
      for (auto [p, coeff] : model.covers[j])
        if (cover_count[p]++ == 0) --uncovered;
      dfs();
      for (auto [p, coeff] : model.covers[j])
        if (--cover_count[p] == 0) ++uncovered;
      current.pop_back();
      chosen[j] = 0;
    }
  };
  dfs();

  std::vector<Kmer> witness;
  for (std::uint32_t j : best_set) witness.push_back(kmer_from_index(j, model.instance));
  return {best, witness};
}

GenericIlp to_generic(const IlpModel& model) {
  const int k = model.instance.k, a = model.instance.a, d = model.var_count();
  GenericIlp g;
  g.name = "resolvability_membership";

  auto zname = [](int j) { return "z" + std::to_string(j + 1); };
  auto wname = [](int j) { return "w" + std::to_string(j + 1); };

  switch (model.mode) {
    case ObjectiveMode::PowersOfTwo:
      for (int j = 0; j < d; ++j)
        g.objective.push_back({zname(j), std::ldexp(1.0, j + 1)});  // c_j = 2^j, 1-based
      break;
    case ObjectiveMode::RandomNormal:
      for (int j = 0; j < d; ++j)
        g.objective.push_back({zname(j), model.c[static_cast<std::size_t>(j)]});
      break;
    case ObjectiveMode::FeasibilityThreshold:
      break;  // feasibility problem: zero objective
  }

  int rowno = 0;
  for (const auto& row : model.A) {
    GenericRow r;
    r.name = "ker" + std::to_string(++rowno);
    for (int j = 0; j < d; ++j)
      if (row[static_cast<std::size_t>(j)] != 0)
        r.terms.push_back({zname(j), static_cast<double>(row[static_cast<std::size_t>(j)])});
    r.sense = 'E';
    r.rhs = 0.0;
    g.rows.push_back(std::move(r));
  }
  for (int b = 0; b < k; ++b) {
    GenericRow sum;
    sum.name = "blocksum" + std::to_string(b + 1);
    GenericRow l1;
    l1.name = "blockl1_" + std::to_string(b + 1);
    for (int j = b * a; j < (b + 1) * a; ++j) {
      sum.terms.push_back({zname(j), 1.0});
      l1.terms.push_back({wname(j), 1.0});
    }
    sum.sense = 'E';
    sum.rhs = 0.0;
    l1.sense = 'L';
    l1.rhs = 2.0;
    g.rows.push_back(std::move(sum));
    g.rows.push_back(std::move(l1));
  }
  for (int j = 0; j < d; ++j) {
    GenericRow up{"absu" + std::to_string(j + 1), {{zname(j), 1.0}, {wname(j), -1.0}}, 'L', 0.0};
    GenericRow dn{"absl" + std::to_string(j + 1), {{zname(j), -1.0}, {wname(j), -1.0}}, 'L', 0.0};
    g.rows.push_back(std::move(up));
    g.rows.push_back(std::move(dn));
  }
  if (model.mode == ObjectiveMode::FeasibilityThreshold) {
    GenericRow cut;
    cut.name = "negcut";
    for (int j = 0; j < d; ++j)
      cut.terms.push_back({zname(j), model.c[static_cast<std::size_t>(j)]});
    cut.sense = 'L';
    cut.rhs = -model.delta;
    g.rows.push_back(std::move(cut));
  }
  for (int j = 0; j < d; ++j) g.bounds.push_back({zname(j), -1.0, 1.0});
  for (int j = 0; j < d; ++j) g.bounds.push_back({wname(j), 0.0, 1.0});
  for (int j = 0; j < d; ++j) g.generals.push_back(zname(j));
  for (int j = 0; j < d; ++j) g.generals.push_back(wname(j));
  return g;
}

GenericIlp classic_to_generic(const ClassicModel& model) {
  GenericIlp g;
  g.name = "classic_min_resolving";
  auto yname = [](std::uint64_t j) { return "y" + std::to_string(j + 1); };
  for (std::uint64_t j = 0; j < model.n_vertices; ++j) g.objective.push_back({yname(j), 1.0});
  std::vector<GenericRow> rows(model.n_pairs);
  for (std::uint32_t p = 0; p < model.n_pairs; ++p) {
    rows[p].name = "pair" + std::to_string(p + 1);
    rows[p].sense = 'G';
    rows[p].rhs = 1.0;
  }
  for (std::uint64_t j = 0; j < model.n_vertices; ++j)
    for (auto [p, coeff] : model.covers[j])
      rows[p].terms.push_back({yname(j), static_cast<double>(coeff)});
  g.rows = std::move(rows);
  for (std::uint64_t j = 0; j < model.n_vertices; ++j) {
    g.bounds.push_back({yname(j), 0.0, 1.0});
    g.generals.push_back(yname(j));
  }
  return g;
}

}  // namespace hrs
