#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hrs/polynomial.hpp"

namespace hrs {

/// Remainder of multivariate long-division of f by the ordered list P.
/// No monomial of the result is divisible by any leading monomial in P.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& P,
                  MonomialOrdering ord);

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q,
                        MonomialOrdering ord);

/// Buchberger's algorithm. Pending pairs are processed smallest-LCM-first
/// (normal strategy); pairs with coprime leading monomials and pairs
/// eliminated by the chain criterion are skipped.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& P,
                                   MonomialOrdering ord);

/// Like buchberger, but gives up and returns nullopt after max_steps work
/// units, so a caller can retry under a different ordering when one behaves
/// pathologically. A rewrite of a polynomial with t terms costs t units,
/// making the budget a deterministic measure roughly proportional to
/// running time. steps_used, when given, receives the units consumed.
std::optional<std::vector<Polynomial>> buchberger_budgeted(
    const std::vector<Polynomial>& P, MonomialOrdering ord,
    std::size_t max_steps, std::size_t* steps_used = nullptr);

/// The unique reduced Groebner basis of the ideal of G (G must already be a
/// Groebner basis; verified defensively when verify is true). Output sorted
/// ascending by leading monomial.
std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G,
                                     MonomialOrdering ord, bool verify = true);

bool is_groebner_basis(const std::vector<Polynomial>& G, MonomialOrdering ord);

/// True when the reduced basis is {1}, i.e. the system has no common root.
bool is_unit_basis(const std::vector<Polynomial>& reduced);

}  // namespace hrs
