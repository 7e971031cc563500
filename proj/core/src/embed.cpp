#include "hrs/embed.hpp"

#include <fstream>
#include <sstream>

#include "hrs/set_io.hpp"

namespace hrs {

std::vector<int> embed(const Kmer& v, const EmbeddingBasis& basis) {
  if (!(v.instance == basis.instance))
    throw InstanceMismatch("embed: kmer instance differs from basis instance");
  std::vector<int> phi;
  phi.reserve(basis.set.size());
  for (const Kmer& r : basis.set) phi.push_back(hamming_distance(v, r));
  return phi;
}

std::uint64_t embed_stream(std::istream& in, const EmbeddingBasis& basis,
                           std::ostream& out) {
  out << "sequence";
  for (int i = 1; i <= basis.dimension(); ++i) out << ",phi_" << i;
  out << "\n";
  std::uint64_t count = 0;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Kmer v;
    try {
      v = parse_kmer(line, basis.instance);
    } catch (const Error& e) {
      throw UnknownSymbol("line " + std::to_string(lineno) + ": " + e.what());
    }
    out << line;
    for (int d : embed(v, basis)) out << "," << d;
    out << "\n";
    ++count;
  }
  return count;
}

std::uint64_t embed_file(const std::string& input_path, const EmbeddingBasis& basis,
                         const std::string& output_path) {
  std::ifstream in(input_path);
  if (!in) throw IoError("cannot open " + input_path);
  std::ofstream out(output_path);
  if (!out) throw IoError("cannot open " + output_path + " for writing");
  std::uint64_t n = embed_stream(in, basis, out);
  if (!out) throw IoError("write failed: " + output_path);
  return n;
}

EmbeddingBasis load_basis(const std::string& source) {
  EmbeddingBasis basis;
  VertexSet set;
  if (source == kShippedBasisName) {
    std::istringstream in(kOctapeptide77Text);
    set = read_set(in);
    basis.provenance = kShippedBasisName;
  } else {
    set = read_set_file(source);
    basis.provenance = "user-file";
  }
  basis.instance = set.instance;
  basis.set = dedupe(set.kmers, /*warn=*/true);
  return basis;
}

std::uint64_t basis_content_hash(const EmbeddingBasis& basis) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  };
  bool first = true;
  for (const Kmer& v : basis.set) {
    if (!first) mix('\n');
    first = false;
    for (char c : render_kmer(v)) mix(c);
  }
  return h;
}

}  // namespace hrs
