#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hrs/buchberger.hpp"
#include "hrs/constraints.hpp"

using namespace hrs;
using namespace tst;

TEST_SUITE_BEGIN("polysys");

TEST_CASE("monomial comparison: lex vs graded orders") {
  Monomial z1 = Monomial::var(2, 0);
  Monomial z2c = Monomial::var(2, 1, 3);
  CHECK(compare(z1, z2c, MonomialOrdering::Lex) > 0);
  CHECK(compare(z1, z2c, MonomialOrdering::GrLex) < 0);
  CHECK(compare(z1, z2c, MonomialOrdering::GRevLex) < 0);
  CHECK(compare(z1, z1, MonomialOrdering::Lex) == 0);
  CHECK(compare(z2c, z2c, MonomialOrdering::GrLex) == 0);

  Monomial z13 = Monomial::var(3, 0);
  CHECK_THROWS_AS(compare(z1, z13, MonomialOrdering::Lex), DimensionMismatch);
}

TEST_CASE("lcm and coprimality of monomials") {
  Monomial m1 = Monomial::var(2, 0);       // z1
  Monomial m2 = Monomial::var(2, 1, 3);    // z2^3
  CHECK(lcm(m1, m2) == Monomial({std::vector<std::uint16_t>{1, 3}}));
  CHECK(coprime(m1, m2));
  CHECK_FALSE(coprime(m1, lcm(m1, m2)));
}

TEST_CASE("ordering axioms: multiplicative, 1 minimal") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> d(0, 3);
  for (MonomialOrdering ord :
       {MonomialOrdering::Lex, MonomialOrdering::GrLex, MonomialOrdering::GRevLex}) {
    for (int t = 0; t < 200; ++t) {
      Monomial a({std::vector<std::uint16_t>{(std::uint16_t)d(gen), (std::uint16_t)d(gen), (std::uint16_t)d(gen)}});
      Monomial b({std::vector<std::uint16_t>{(std::uint16_t)d(gen), (std::uint16_t)d(gen), (std::uint16_t)d(gen)}});
      Monomial c({std::vector<std::uint16_t>{(std::uint16_t)d(gen), (std::uint16_t)d(gen), (std::uint16_t)d(gen)}});
      CHECK(compare(a, b, ord) == -compare(b, a, ord));
      CHECK(compare(a * c, b * c, ord) == compare(a, b, ord));
      if (!a.is_one()) CHECK(compare(Monomial::one(3), a, ord) < 0);
    }
  }
}

TEST_CASE("polynomial arithmetic stays exact over the rationals") {
  Polynomial p = zv(1, 2) * Rational(1, 3);
  CHECK(p * Rational(3) == zv(1, 2));
  CHECK((p + p + p) == zv(1, 2));
  Polynomial q = (zv(1, 2) + zv(2, 2)) * (zv(1, 2) - zv(2, 2));
  CHECK(q == zpow(1, 2, 2) - zpow(2, 2, 2));
  CHECK((q - q).is_zero());
}

TEST_CASE("textual rendering of polynomials") {
  Polynomial p = zpow(5, 2, 6) + zv(5, 6) * zv(6, 6) + zpow(6, 2, 6) - Rational(1);
  CHECK(p.to_string() == "z5^2 + z5*z6 + z6^2 - 1");
  CHECK(Polynomial::zero(2, MonomialOrdering::Lex).to_string() == "0");
  CHECK(Polynomial::constant(1, 2, MonomialOrdering::Lex).to_string() == "1");
}

TEST_CASE("reduce: long-division examples") {
  // z1^2 reduced by {z1+z2}: two division steps leave z2^2.
  Polynomial f = zpow(1, 2, 2);
  Polynomial g = zv(1, 2) + zv(2, 2);
  CHECK(reduce(f, {g}, MonomialOrdering::Lex) == zpow(2, 2, 2));

  // Exact divisor.
  Polynomial p = zpow(1, 3, 2) - zv(1, 2);
  CHECK(reduce(p, {p}, MonomialOrdering::Lex).is_zero());

  // No monomial of the remainder is divisible by a divisor's leading monomial.
  Polynomial r = reduce(zpow(1, 4, 2) + zv(2, 2), {g}, MonomialOrdering::Lex);
  for (const Term& t : r.terms())
    CHECK_FALSE(g.leading_monomial().divides(t.mono));
}

TEST_CASE("reduce shift property: constants pass through a non-unit reduced basis") {
  auto G = closed_form_reduced_basis(HammingInstance(1, 3));
  Polynomial f = auxiliary_polynomial(HammingInstance(1, 3));
  for (int c : {1, 2, -4}) {
    Polynomial lhs = reduce(f + Rational(c), G, MonomialOrdering::Lex);
    Polynomial rhs = reduce(f, G, MonomialOrdering::Lex) + Rational(c);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("s_polynomial cancels leading terms") {
  Polynomial p = zv(1, 2) + zv(2, 2);
  Polynomial q = zpow(2, 3, 2) - zv(2, 2);
  // Spoly(z1+z2, z2^3-z2) under lex = z2^4 + z1*z2.
  Polynomial s = s_polynomial(p, q, MonomialOrdering::Lex);
  CHECK(s == zpow(2, 4, 2) + zv(1, 2) * zv(2, 2));

  CHECK(s_polynomial(p, p, MonomialOrdering::Lex).is_zero());

  // The LCM monomial never survives.
  Monomial c = lcm(p.leading_monomial(), q.leading_monomial());
  for (const Term& t : s.terms()) CHECK_FALSE(t.mono == c);
}

TEST_CASE("buchberger on the a=2 block gives {z1+z2, z2^3-z2}") {
  ConstraintSystem sys = build_constraints(HammingInstance(1, 2));
  auto G = reduce_basis(buchberger(sys.all(), MonomialOrdering::Lex),
                        MonomialOrdering::Lex);
  std::vector<Polynomial> expected = {zv(1, 2) + zv(2, 2), zpow(2, 3, 2) - zv(2, 2)};
  CHECK(same_poly_set(G, expected));
}

TEST_CASE("buchberger fixed point: a Groebner basis stays ideal-equal") {
  std::vector<Polynomial> G0 = {zv(1, 2) + zv(2, 2), zpow(2, 3, 2) - zv(2, 2)};
  REQUIRE(is_groebner_basis(G0, MonomialOrdering::Lex));
  auto G = buchberger(G0, MonomialOrdering::Lex);
  CHECK(is_groebner_basis(G, MonomialOrdering::Lex));
  // Same ideal: each generator set reduces to zero by the other.
  for (const auto& g : G0) CHECK(reduce(g, G, MonomialOrdering::Lex).is_zero());
  for (const auto& g : G) CHECK(reduce(g, G0, MonomialOrdering::Lex).is_zero());
  CHECK(same_poly_set(reduce_basis(G, MonomialOrdering::Lex), G0));
}

TEST_CASE("the H_{2,3} system with z3+z6 forced and f-4 is the unit ideal") {
  const int d = 6;
  ConstraintSystem sys = build_constraints(H23);
  std::vector<Polynomial> P = {zv(1, d) + zv(6, d), zv(2, d) + zv(5, d),
                               zv(3, d) + zv(6, d)};
  for (const auto& p : sys.all()) P.push_back(p);
  P.push_back(auxiliary_polynomial(H23) - Rational(4));
  auto G = reduce_basis(buchberger(P, MonomialOrdering::Lex), MonomialOrdering::Lex);
  CHECK(is_unit_basis(G));
}

TEST_CASE("reduce_basis: normalization, unit ideal, defensive check") {
  Polynomial g1 = (zv(1, 2) + zv(2, 2)) * Rational(2);
  Polynomial g2 = zpow(2, 3, 2) - zv(2, 2);
  auto R = reduce_basis({g1, g2}, MonomialOrdering::Lex);
  CHECK(same_poly_set(R, {zv(1, 2) + zv(2, 2), g2}));

  auto unit = reduce_basis({Polynomial::constant(1, 2, MonomialOrdering::Lex), zv(1, 2)},
                           MonomialOrdering::Lex);
  REQUIRE(unit.size() == 1);
  CHECK(is_unit_basis(unit));

  // {z1*z2 - 1, z1^2 - z2} is not a Groebner basis under lex.
  std::vector<Polynomial> notGB = {zv(1, 3) * zv(2, 3) - Rational(1),
                                   zpow(1, 2, 3) - zv(2, 3)};
  REQUIRE_FALSE(is_groebner_basis(notGB, MonomialOrdering::Lex));
  CHECK_THROWS_AS(reduce_basis(notGB, MonomialOrdering::Lex), NotAGroebnerBasis);
}

TEST_CASE("reduce_basis output is sorted and invariant under input permutation") {
  ConstraintSystem sys = build_constraints(HammingInstance(1, 4));
  auto polys = sys.all();
  auto G1 = reduce_basis(buchberger(polys, MonomialOrdering::Lex), MonomialOrdering::Lex);
  std::reverse(polys.begin(), polys.end());
  auto G2 = reduce_basis(buchberger(polys, MonomialOrdering::Lex), MonomialOrdering::Lex);
  REQUIRE(G1.size() == G2.size());
  for (std::size_t i = 0; i < G1.size(); ++i) CHECK(G1[i] == G2[i]);
  for (std::size_t i = 1; i < G1.size(); ++i)
    CHECK(compare(G1[i - 1].leading_monomial(), G1[i].leading_monomial(),
                  MonomialOrdering::Lex) < 0);
}

TEST_CASE("ideal membership: combinations of generators reduce to zero") {
  ConstraintSystem sys = build_constraints(HammingInstance(1, 3));
  auto P = sys.all();
  auto G = buchberger(P, MonomialOrdering::Lex);
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(P.size()) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 25; ++t) {
    Polynomial f = Polynomial::zero(3, MonomialOrdering::Lex);
    for (int j = 0; j < 3; ++j) {
      Polynomial mult = Polynomial::constant(coef(gen), 3, MonomialOrdering::Lex) +
                        zv(1 + (t + j) % 3, 3) * Rational(coef(gen));
      f = f + mult * P[static_cast<std::size_t>(pick(gen))];
    }
    CHECK(reduce(f, G, MonomialOrdering::Lex).is_zero());
  }
}

TEST_CASE("budgeted buchberger: exhaustion is reported, enough budget completes") {
  auto P = build_constraints(HammingInstance(1, 3)).all();
  CHECK_FALSE(buchberger_budgeted(P, MonomialOrdering::Lex, 0).has_value());

  std::size_t used = 0;
  auto G = buchberger_budgeted(P, MonomialOrdering::Lex, 1u << 30, &used);
  REQUIRE(G.has_value());
  CHECK(used > 0);
  CHECK(used < (1u << 30));
  auto reference = buchberger(P, MonomialOrdering::Lex);
  CHECK(same_poly_set(reduce_basis(*G, MonomialOrdering::Lex),
                      reduce_basis(reference, MonomialOrdering::Lex)));

  // Any budget at least as large as the requirement gives the same basis.
  auto again = buchberger_budgeted(P, MonomialOrdering::Lex, used, &used);
  REQUIRE(again.has_value());
  CHECK(same_poly_set(*again, *G));
}

TEST_CASE("reduce by a reduced Groebner basis ignores list order") {
  auto G = closed_form_reduced_basis(HammingInstance(2, 3));
  Polynomial f = auxiliary_polynomial(H23) * zv(1, 6) + zpow(5, 4, 6) - Rational(7, 2);
  Polynomial r = reduce(f, G, MonomialOrdering::Lex);
  std::mt19937 gen(9);
  for (int t = 0; t < 10; ++t) {
    std::shuffle(G.begin(), G.end(), gen);
    CHECK(reduce(f, G, MonomialOrdering::Lex) == r);
  }
}

TEST_SUITE_END();
