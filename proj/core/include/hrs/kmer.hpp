#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrs/errors.hpp"

namespace hrs {

/// Parameters of the Hamming graph H_{k,a}: words of length k over an
/// alphabet of size a. Symbols are integers 0..a-1 internally; an optional
/// display alphabet maps them to characters.
struct HammingInstance {
  int k = 1;
  int a = 2;
  std::optional<std::string> alphabet;  // exactly a distinct chars when set

  HammingInstance() = default;
  HammingInstance(int k_, int a_, std::optional<std::string> alpha = std::nullopt);

  // Display alphabets are presentation only; identity is (k, a).
  bool operator==(const HammingInstance& o) const { return k == o.k && a == o.a; }

  std::uint64_t vertex_count_capped(std::uint64_t cap) const;  // min(a^k, cap+1)

  int symbol_index(char c) const;   // throws UnknownSymbol
  char symbol_char(int s) const;    // inverse of symbol_index
  bool has_char_rendering() const { return alphabet.has_value() || a <= 10; }
};

struct Kmer {
  std::vector<int> symbols;  // length k, entries in [0, a-1]
  HammingInstance instance;

  Kmer() = default;
  Kmer(std::vector<int> syms, HammingInstance inst);

  bool operator==(const Kmer& o) const { return symbols == o.symbols; }
  bool operator<(const Kmer& o) const { return symbols < o.symbols; }
};

Kmer parse_kmer(const std::string& text, const HammingInstance& instance);
std::string render_kmer(const Kmer& v);

int hamming_distance(const Kmer& u, const Kmer& v);

/// Column-major vectorization of the one-hot encoding: k blocks of length a,
/// block j carrying a single 1 at index v[j].
std::vector<std::int8_t> one_hot_vec(const Kmer& v);

/// The n x ak model matrix with rows one_hot_vec(R[i]).
struct ModelMatrix {
  std::vector<std::vector<std::int8_t>> rows;
  HammingInstance instance;
  std::vector<Kmer> source_set;  // deduplicated, in input order

  int cols() const { return instance.a * instance.k; }
  int n() const { return static_cast<int>(rows.size()); }
};

/// Duplicates are dropped (with a note on stderr when warn is true); a
/// duplicate row cannot change resolvability.
ModelMatrix build_A(const std::vector<Kmer>& R, bool warn = true);

std::vector<Kmer> dedupe(const std::vector<Kmer>& R, bool warn = true);

/// Interpret a vector of blockwise canonical-vector differences as a kmer
/// pair (x, y) with one_hot_vec(x) - one_hot_vec(y) = z. Zero blocks assign
/// symbol 0 to both sides. nullopt when z violates the block structure or is
/// zero everywhere.
std::optional<std::pair<Kmer, Kmer>> difference_to_pair(const std::vector<int>& z,
                                                        const HammingInstance& instance);

// Odometer helpers over all a^k vertices (no vertex list materialized).
Kmer kmer_from_index(std::uint64_t index, const HammingInstance& instance);
std::uint64_t kmer_to_index(const Kmer& v);

}  // namespace hrs
