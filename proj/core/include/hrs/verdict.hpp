#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "hrs/kmer.hpp"

namespace hrs {

enum class Status { Resolving, NotResolving, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Resolving: return "RESOLVING";
    case Status::NotResolving: return "NOT RESOLVING";
    default: return "INCONCLUSIVE";
  }
}

struct Verdict {
  Status status = Status::Inconclusive;
  std::optional<std::pair<Kmer, Kmer>> witness;  // set iff NotResolving and known
  std::string method;
  std::string reason;  // for Inconclusive
  double seconds = 0.0;
  std::uint64_t work = 0;  // nodes explored / bases computed / vertices scanned
};

/// A NotResolving witness must share distances to every tested vertex.
inline bool witness_checks_out(const std::pair<Kmer, Kmer>& w,
                               const std::vector<Kmer>& R) {
  if (w.first == w.second) return false;
  for (const Kmer& r : R)
    if (hamming_distance(w.first, r) != hamming_distance(w.second, r)) return false;
  return true;
}

}  // namespace hrs
