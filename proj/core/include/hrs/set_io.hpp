#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hrs/kmer.hpp"

namespace hrs {

// "hrs-set v1" vertex-set files: first non-comment line `k=<int> a=<int>`
// optionally followed by `alphabet=<a distinct chars>`, then one k-mer per
// line. Lines starting with '#' are comments.

struct VertexSet {
  HammingInstance instance;
  std::vector<Kmer> kmers;
};

VertexSet read_set(std::istream& in);
VertexSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const VertexSet& set);
void write_set_file(const std::string& path, const VertexSet& set);

}  // namespace hrs
