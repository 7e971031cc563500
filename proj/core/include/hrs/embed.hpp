#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hrs/kmer.hpp"

namespace hrs {

/// An ordered resolving set used as an embedding basis: coordinate i of the
/// embedding of v is the Hamming distance from v to set[i].
struct EmbeddingBasis {
  std::vector<Kmer> set;
  HammingInstance instance;
  std::string provenance;  // "shipped-octapeptide-77", "user-file", "shrink-output"
  bool verified = false;
  std::string verified_by;

  int dimension() const { return static_cast<int>(set.size()); }
};

std::vector<int> embed(const Kmer& v, const EmbeddingBasis& basis);

/// One sequence per input line; writes CSV `sequence,phi_1,...,phi_n`.
/// Streaming; returns the number of embedded rows.
std::uint64_t embed_file(const std::string& input_path, const EmbeddingBasis& basis,
                         const std::string& output_path);
std::uint64_t embed_stream(std::istream& in, const EmbeddingBasis& basis,
                           std::ostream& out);

/// `shipped-octapeptide-77` or an hrs-set file path.
EmbeddingBasis load_basis(const std::string& source);

inline constexpr const char* kShippedBasisName = "shipped-octapeptide-77";
inline constexpr const char* kAminoAlphabet = "arndcqeghilkmfpstwyv";

/// The shipped 77-sequence basis, hrs-set v1 text.
extern const char* const kOctapeptide77Text;

/// FNV-1a 64 over the newline-joined sequences of a basis; pinned in tests.
std::uint64_t basis_content_hash(const EmbeddingBasis& basis);

}  // namespace hrs
