#pragma once

#include <initializer_list>
#include <vector>

#include "hrs/kmer.hpp"
#include "hrs/polynomial.hpp"

namespace tst {

inline std::vector<hrs::Kmer> set_of(const hrs::HammingInstance& inst,
                                     std::initializer_list<const char*> texts) {
  std::vector<hrs::Kmer> out;
  for (const char* t : texts) out.push_back(hrs::parse_kmer(t, inst));
  return out;
}

// 1-based lex variable z_i in dimension d.
inline hrs::Polynomial zv(int i, int d,
                          hrs::MonomialOrdering ord = hrs::MonomialOrdering::Lex) {
  return hrs::Polynomial::variable(i - 1, d, ord);
}

inline hrs::Polynomial zpow(int i, int p, int d,
                            hrs::MonomialOrdering ord = hrs::MonomialOrdering::Lex) {
  return hrs::Polynomial::term(1, hrs::Monomial::var(d, i - 1, p), ord);
}

inline const hrs::HammingInstance H12{1, 2};
inline const hrs::HammingInstance H22{2, 2};
inline const hrs::HammingInstance H23{2, 3};

inline std::vector<hrs::Kmer> r0() { return set_of(H23, {"02", "11"}); }
inline std::vector<hrs::Kmer> r1() { return set_of(H23, {"02", "11", "22"}); }

// Unordered polynomial-set equality (each side contained in the other).
inline bool same_poly_set(const std::vector<hrs::Polynomial>& x,
                          const std::vector<hrs::Polynomial>& y) {
  if (x.size() != y.size()) return false;
  for (const auto& p : x) {
    bool hit = false;
    for (const auto& q : y)
      if (p == q) { hit = true; break; }
    if (!hit) return false;
  }
  return true;
}

}  // namespace tst
