#pragma once

#include <cstdint>
#include <vector>

#include "hrs/verdict.hpp"

namespace hrs {

/// Ground truth by distance-vector uniqueness: compute the distance profile of
/// every vertex, sort, scan for adjacent duplicates. Storage is O(a^k |R|),
/// never the O(a^{2k}) distance matrix.
Verdict brute_force_verify(const std::vector<Kmer>& R,
                           std::uint64_t vertex_cap = 10'000'000);

struct UnresolvedReport {
  std::vector<std::pair<Kmer, Kmer>> pairs;
  bool truncated = false;
};

UnresolvedReport all_unresolved_pairs(const std::vector<Kmer>& R,
                                      std::size_t limit = SIZE_MAX,
                                      std::uint64_t vertex_cap = 10'000'000);

/// Smallest resolving-set size, by increasing-size subset enumeration.
std::pair<int, std::vector<Kmer>> metric_dimension_exhaustive(
    const HammingInstance& instance, std::uint64_t vertex_cap = 32);

enum class HypercubeForm { B, C };  // rows v - flip(v) in {-1,1}, or rows v in {0,1}

/// Hypercube specialization: search {0,+-1}^k for a nonzero kernel vector of
/// the B or C matrix. Form C requires the all-ones kmer in R.
Verdict hypercube_verify(const std::vector<Kmer>& R, HypercubeForm form);

/// Coordinate-flip automorphism taking the first element of R to 1^k;
/// preserves pairwise distances and resolvability.
std::vector<Kmer> normalize_to_ones(const std::vector<Kmer>& R);

}  // namespace hrs
