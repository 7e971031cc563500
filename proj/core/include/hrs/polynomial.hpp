#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "hrs/errors.hpp"

namespace hrs {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class MonomialOrdering { Lex, GrLex, GRevLex };

MonomialOrdering ordering_from_name(const std::string& name);

/// Exponent vector of a power product z_1^{e_1} ... z_d^{e_d}.
struct Monomial {
  std::vector<std::uint16_t> e;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> exps) : e(std::move(exps)) {}
  static Monomial one(int dim) { return Monomial(std::vector<std::uint16_t>(static_cast<std::size_t>(dim), 0)); }
  static Monomial var(int dim, int i, int power = 1);

  int dim() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool is_one() const;
  bool operator==(const Monomial& o) const { return e == o.e; }

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;  // requires o.divides(*this)
};

Monomial lcm(const Monomial& m1, const Monomial& m2);
bool coprime(const Monomial& m1, const Monomial& m2);

/// -1 / 0 / +1 for m1 < m2 / m1 == m2 / m1 > m2 under ord.
int compare(const Monomial& m1, const Monomial& m2, MonomialOrdering ord);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over Q. Terms are kept sorted descending under the
/// ordering fixed at construction, so LT/LM/LC are O(1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int dim, MonomialOrdering ord = MonomialOrdering::Lex)
      : dim_(dim), ord_(ord) {}
  Polynomial(std::vector<Term> terms, int dim, MonomialOrdering ord);

  static Polynomial zero(int dim, MonomialOrdering ord) { return Polynomial(dim, ord); }
  static Polynomial constant(const Rational& c, int dim, MonomialOrdering ord);
  static Polynomial variable(int i, int dim, MonomialOrdering ord);
  static Polynomial term(const Rational& c, Monomial m, MonomialOrdering ord);

  int dim() const { return dim_; }
  MonomialOrdering ordering() const { return ord_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Term leading_term() const;

  Polynomial with_ordering(MonomialOrdering ord) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator+(const Rational& c) const;
  Polynomial operator-(const Rational& c) const;

  /// Multiply by a single term c * m.
  Polynomial times_term(const Rational& c, const Monomial& m) const;

  /// Scale so the leading coefficient is 1.
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && equal_terms(o); }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  bool equal_terms(const Polynomial& o) const;
  void normalize();

  std::vector<Term> terms_;  // descending under ord_
  int dim_ = 0;
  MonomialOrdering ord_ = MonomialOrdering::Lex;
};

void check_compatible(const Polynomial& a, const Polynomial& b);

}  // namespace hrs
