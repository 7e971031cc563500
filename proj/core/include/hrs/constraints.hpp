#pragma once

#include <vector>

#include "hrs/kmer.hpp"
#include "hrs/polynomial.hpp"

namespace hrs {

/// The constraint system whose common roots are exactly the vectors whose k
/// length-a blocks are each a difference of two canonical vectors:
///   p1: z_i^3 - z_i for every variable
///   p2: per-block coordinate sums
///   p3: per-block (2 - sum z_j^2) * (sum z_j^2)
struct ConstraintSystem {
  HammingInstance instance;
  std::vector<Polynomial> p1, p2, p3;
  std::vector<std::vector<Polynomial>> blocks;  // blocks[i] touches vars ia..ia+a-1

  std::vector<Polynomial> all() const;
};

ConstraintSystem build_constraints(const HammingInstance& instance,
                                   MonomialOrdering ord = MonomialOrdering::Lex);

/// The reduced lex Groebner basis of the block system, assembled per block:
/// for the first block {sum z_i} u {z_i^3 - z_i} u {z_i^2 z_j + z_i z_j^2}
/// u {z_i z_j z_l}, index-shifted copies for the rest.
std::vector<Polynomial> closed_form_reduced_basis(const HammingInstance& instance);

/// f(z) = sum of z_j^2 over all ak variables; on roots of the constraint
/// system its value is one of 0, 2, ..., 2k.
Polynomial auxiliary_polynomial(const HammingInstance& instance,
                                MonomialOrdering ord = MonomialOrdering::Lex);

/// Rows of A as degree-1 polynomials sum_j A[i][j] z_j.
std::vector<Polynomial> matrix_row_polynomials(const ModelMatrix& A,
                                               MonomialOrdering ord = MonomialOrdering::Lex);

}  // namespace hrs
