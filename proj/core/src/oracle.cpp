#include "hrs/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

namespace hrs {

namespace {

int bits_for(int k) {
  int b = 1;
  while ((1 << b) <= k) ++b;  // values 0..k
  return b;
}

struct PhiTable {
  std::vector<std::uint64_t> words;  // stride-flattened packed profiles
  std::vector<std::uint32_t> order;  // vertex indices sorted by profile
  std::size_t stride = 0;

  bool equal(std::uint32_t x, std::uint32_t y) const {
    return std::equal(words.begin() + static_cast<std::ptrdiff_t>(x * stride),
                      words.begin() + static_cast<std::ptrdiff_t>((x + 1) * stride),
                      words.begin() + static_cast<std::ptrdiff_t>(y * stride));
  }
};

PhiTable build_phi_table(const std::vector<Kmer>& R, const HammingInstance& inst,
                         std::uint64_t n) {
  const int k = inst.k, a = inst.a;
  const int bits = bits_for(k);
  const std::size_t stride =
      (R.size() * static_cast<std::size_t>(bits) + 63) / 64;

  PhiTable t;
  t.stride = stride;
  t.words.assign(static_cast<std::size_t>(n) * stride, 0);

  // Odometer over vertices; distances updated per reference set element.
  std::vector<int> digits(static_cast<std::size_t>(k), 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    std::uint64_t* row = t.words.data() + static_cast<std::size_t>(v) * stride;
    std::size_t bitpos = 0;
    for (const Kmer& r : R) {
      int d = 0;
      for (int j = 0; j < k; ++j)
        if (digits[static_cast<std::size_t>(j)] != r.symbols[static_cast<std::size_t>(j)]) ++d;
      row[bitpos / 64] |= static_cast<std::uint64_t>(d) << (bitpos % 64);
      if (bitpos % 64 + static_cast<std::size_t>(bits) > 64)
        row[bitpos / 64 + 1] |= static_cast<std::uint64_t>(d) >> (64 - bitpos % 64);
      bitpos += static_cast<std::size_t>(bits);
    }
    // advance odometer (least-significant digit last)
    for (int j = k - 1; j >= 0; --j) {
      if (++digits[static_cast<std::size_t>(j)] < a) break;
      digits[static_cast<std::size_t>(j)] = 0;
    }
  }

  t.order.resize(static_cast<std::size_t>(n));
  std::iota(t.order.begin(), t.order.end(), 0u);
  std::sort(t.order.begin(), t.order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return std::lexicographical_compare(
        t.words.begin() + static_cast<std::ptrdiff_t>(x * stride),
        t.words.begin() + static_cast<std::ptrdiff_t>((x + 1) * stride),
        t.words.begin() + static_cast<std::ptrdiff_t>(y * stride),
        t.words.begin() + static_cast<std::ptrdiff_t>((y + 1) * stride));
  });
  return t;
}

std::uint64_t checked_vertex_count(const HammingInstance& inst, std::uint64_t cap) {
  std::uint64_t n = inst.vertex_count_capped(cap);
  if (n > cap)
    throw InstanceTooLarge("a^k exceeds the vertex cap " + std::to_string(cap));
  return n;
}

}  // namespace

Verdict brute_force_verify(const std::vector<Kmer>& R, std::uint64_t vertex_cap) {
  auto t0 = std::chrono::steady_clock::now();
  ModelMatrix A = build_A(R, /*warn=*/false);  // validates and dedupes
  const HammingInstance inst = A.instance;
  std::uint64_t n = checked_vertex_count(inst, vertex_cap);

  PhiTable t = build_phi_table(A.source_set, inst, n);

  Verdict v;
  v.method = "brute";
  v.work = n;
  v.status = Status::Resolving;
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    if (t.equal(t.order[i - 1], t.order[i])) {
      v.status = Status::NotResolving;
      v.witness = std::make_pair(kmer_from_index(t.order[i - 1], inst),
                                 kmer_from_index(t.order[i], inst));
      break;
    }
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

UnresolvedReport all_unresolved_pairs(const std::vector<Kmer>& R, std::size_t limit,
                                      std::uint64_t vertex_cap) {
  ModelMatrix A = build_A(R, /*warn=*/false);
  const HammingInstance inst = A.instance;
  std::uint64_t n = checked_vertex_count(inst, vertex_cap);
  PhiTable t = build_phi_table(A.source_set, inst, n);

  UnresolvedReport rep;
  std::size_t i = 0;
  while (i < t.order.size()) {
    std::size_t j = i + 1;
    while (j < t.order.size() && t.equal(t.order[i], t.order[j])) ++j;
    for (std::size_t x = i; x < j; ++x) {
      for (std::size_t y = x + 1; y < j; ++y) {
        if (rep.pairs.size() >= limit) {
          rep.truncated = true;
          return rep;
        }
        Kmer ku = kmer_from_index(t.order[x], inst);
        Kmer kv = kmer_from_index(t.order[y], inst);
        if (kv < ku) std::swap(ku, kv);
        rep.pairs.emplace_back(std::move(ku), std::move(kv));
      }
    }
    i = j;
  }
  std::sort(rep.pairs.begin(), rep.pairs.end());
  return rep;
}

std::pair<int, std::vector<Kmer>> metric_dimension_exhaustive(
    const HammingInstance& instance, std::uint64_t vertex_cap) {
  std::uint64_t n = checked_vertex_count(instance, vertex_cap);
  std::vector<Kmer> verts;
  for (std::uint64_t i = 0; i < n; ++i) verts.push_back(kmer_from_index(i, instance));

  for (int s = 1; s <= static_cast<int>(n); ++s) {
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0u);
    for (;;) {
      std::vector<Kmer> subset;
      for (std::uint32_t i : idx) subset.push_back(verts[i]);
      if (brute_force_verify(subset, vertex_cap).status == Status::Resolving)
        return {s, subset};
      // next combination
      int pos = s - 1;
      while (pos >= 0 &&
             idx[static_cast<std::size_t>(pos)] == n - static_cast<std::uint64_t>(s - pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int t = pos + 1; t < s; ++t)
        idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  throw Error("metric_dimension_exhaustive: no resolving subset found");  // unreachable
}

std::vector<Kmer> normalize_to_ones(const std::vector<Kmer>& R) {
  if (R.empty()) throw EmptySet("normalize_to_ones: empty set");
  const HammingInstance inst = R.front().instance;
  if (inst.a != 2) throw NotBinary("normalize_to_ones: requires a = 2");
  const Kmer& anchor = R.front();
  std::vector<Kmer> out;
  out.reserve(R.size());
  for (const Kmer& v : R) {
    if (!(v.instance == inst)) throw InstanceMismatch("normalize_to_ones");
    std::vector<int> syms = v.symbols;
    for (int j = 0; j < inst.k; ++j)
      if (anchor.symbols[static_cast<std::size_t>(j)] == 0)
        syms[static_cast<std::size_t>(j)] ^= 1;
    out.emplace_back(std::move(syms), inst);
  }
  return out;
}

Verdict hypercube_verify(const std::vector<Kmer>& R, HypercubeForm form) {
  auto t0 = std::chrono::steady_clock::now();
  ModelMatrix A = build_A(R, /*warn=*/false);
  const HammingInstance inst = A.instance;
  if (inst.a != 2) throw NotBinary("hypercube_verify: requires a = 2");
  const int k = inst.k;
  const auto& set = A.source_set;

  if (form == HypercubeForm::C) {
    bool has_ones = std::any_of(set.begin(), set.end(), [&](const Kmer& v) {
      return std::all_of(v.symbols.begin(), v.symbols.end(), [](int s) { return s == 1; });
    });
    if (!has_ones)
      throw MissingAllOnes("form C requires the all-ones vertex; normalize_to_ones first");
  }

  // M[r][j]: form B has entries v - flip(v) in {-1,+1}; form C has v in {0,1}.
  std::vector<std::vector<int>> M(set.size(), std::vector<int>(static_cast<std::size_t>(k)));
  for (std::size_t r = 0; r < set.size(); ++r)
    for (int j = 0; j < k; ++j) {
      int b = set[r].symbols[static_cast<std::size_t>(j)];
      M[r][static_cast<std::size_t>(j)] = form == HypercubeForm::B ? 2 * b - 1 : b;
    }

  // Row-wise attainable magnitude of the untouched suffix.
  std::vector<std::vector<int>> suffix(set.size(), std::vector<int>(static_cast<std::size_t>(k) + 1, 0));
  for (std::size_t r = 0; r < set.size(); ++r)
    for (int j = k - 1; j >= 0; --j)
      suffix[r][static_cast<std::size_t>(j)] =
          suffix[r][static_cast<std::size_t>(j) + 1] + std::abs(M[r][static_cast<std::size_t>(j)]);

  std::vector<int> y(static_cast<std::size_t>(k), 0), residual(set.size(), 0);
  std::uint64_t nodes = 0;
  std::function<bool(int, bool)> dfs = [&](int j, bool all_zero) -> bool {
    if (j == k) {
      if (all_zero) return false;
      return std::all_of(residual.begin(), residual.end(), [](int r) { return r == 0; });
    }
    for (int val : {0, 1, -1}) {
      if (all_zero && val == -1) continue;  // -y is in the kernel whenever y is
      ++nodes;
      bool ok = true;
      for (std::size_t r = 0; r < set.size(); ++r) {
        int nr = residual[r] + val * M[r][static_cast<std::size_t>(j)];
        if (std::abs(nr) > suffix[r][static_cast<std::size_t>(j) + 1]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t r = 0; r < set.size(); ++r)
        residual[r] += val * M[r][static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(j)] = val;
      if (dfs(j + 1, all_zero && val == 0)) return true;
      y[static_cast<std::size_t>(j)] = 0;
      for (std::size_t r = 0; r < set.size(); ++r)
        residual[r] -= val * M[r][static_cast<std::size_t>(j)];
    }
    return false;
  };

  Verdict v;
  v.method = form == HypercubeForm::B ? "hypercube-B" : "hypercube-C";
  if (dfs(0, true)) {
    v.status = Status::NotResolving;
    std::vector<int> ux(static_cast<std::size_t>(k), 0), vx(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j) {
      if (y[static_cast<std::size_t>(j)] == 1) ux[static_cast<std::size_t>(j)] = 1;
      if (y[static_cast<std::size_t>(j)] == -1) vx[static_cast<std::size_t>(j)] = 1;
    }
    auto pair = std::make_pair(Kmer(std::move(ux), inst), Kmer(std::move(vx), inst));
    if (witness_checks_out(pair, set)) v.witness = pair;
  } else {
    v.status = Status::Resolving;
  }
  v.work = nodes;
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

}  // namespace hrs
