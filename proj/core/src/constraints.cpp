#include "hrs/constraints.hpp"

namespace hrs {

std::vector<Polynomial> ConstraintSystem::all() const {
  std::vector<Polynomial> out;
  out.insert(out.end(), p1.begin(), p1.end());
  out.insert(out.end(), p2.begin(), p2.end());
  out.insert(out.end(), p3.begin(), p3.end());
  return out;
}

ConstraintSystem build_constraints(const HammingInstance& instance,
                                   MonomialOrdering ord) {
  const int k = instance.k, a = instance.a, d = a * k;
  ConstraintSystem sys;
  sys.instance = instance;

  for (int i = 0; i < d; ++i) {
    Polynomial z = Polynomial::variable(i, d, ord);
    sys.p1.push_back(z * z * z - z);
  }
  for (int b = 0; b < k; ++b) {
    Polynomial sum(d, ord), sumsq(d, ord);
    for (int j = b * a; j < (b + 1) * a; ++j) {
      Polynomial z = Polynomial::variable(j, d, ord);
      sum = sum + z;
      sumsq = sumsq + z * z;
    }
    sys.p2.push_back(sum);
    sys.p3.push_back((Polynomial::constant(Rational(2), d, ord) - sumsq) * sumsq);
  }

  sys.blocks.resize(static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b) {
    auto& block = sys.blocks[static_cast<std::size_t>(b)];
    for (int j = b * a; j < (b + 1) * a; ++j)
      block.push_back(sys.p1[static_cast<std::size_t>(j)]);
    block.push_back(sys.p2[static_cast<std::size_t>(b)]);
    block.push_back(sys.p3[static_cast<std::size_t>(b)]);
  }
  return sys;
}

std::vector<Polynomial> closed_form_reduced_basis(const HammingInstance& instance) {
  const int k = instance.k, a = instance.a, d = a * k;
  const MonomialOrdering ord = MonomialOrdering::Lex;
  std::vector<Polynomial> G;
  for (int b = 0; b < k; ++b) {
    const int off = b * a;
    Polynomial sum(d, ord);
    for (int j = 0; j < a; ++j) sum = sum + Polynomial::variable(off + j, d, ord);
    G.push_back(sum);
    for (int i = 1; i < a; ++i) {
      Polynomial z = Polynomial::variable(off + i, d, ord);
      G.push_back(z * z * z - z);
    }
    for (int i = 1; i < a; ++i) {
      for (int j = i + 1; j < a; ++j) {
        Polynomial zi = Polynomial::variable(off + i, d, ord);
        Polynomial zj = Polynomial::variable(off + j, d, ord);
        G.push_back(zi * zi * zj + zi * zj * zj);
      }
    }
    for (int i = 1; i < a; ++i)
      for (int j = i + 1; j < a; ++j)
        for (int l = j + 1; l < a; ++l) {
          Monomial m = Monomial::var(d, off + i) * Monomial::var(d, off + j) *
                       Monomial::var(d, off + l);
          G.push_back(Polynomial::term(Rational(1), m, ord));
        }
  }
  return G;
}

Polynomial auxiliary_polynomial(const HammingInstance& instance, MonomialOrdering ord) {
  const int d = instance.a * instance.k;
  Polynomial f(d, ord);
  for (int j = 0; j < d; ++j)
    f = f + Polynomial::term(Rational(1), Monomial::var(d, j, 2), ord);
  return f;
}

std::vector<Polynomial> matrix_row_polynomials(const ModelMatrix& A,
                                               MonomialOrdering ord) {
  const int d = A.cols();
  std::vector<Polynomial> rows;
  rows.reserve(A.rows.size());
  for (const auto& row : A.rows) {
    std::vector<Term> terms;
    for (int j = 0; j < d; ++j)
      if (row[static_cast<std::size_t>(j)] != 0)
        terms.push_back({Monomial::var(d, j), Rational(row[static_cast<std::size_t>(j)])});
    rows.emplace_back(std::move(terms), d, ord);
  }
  return rows;
}

}  // namespace hrs
