#include "hrs/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hrs {

MonomialOrdering ordering_from_name(const std::string& name) {
  if (name == "lex") return MonomialOrdering::Lex;
  if (name == "grlex") return MonomialOrdering::GrLex;
  if (name == "grevlex") return MonomialOrdering::GRevLex;
  throw Error("unknown monomial ordering '" + name + "'");
}

Monomial Monomial::var(int dim, int i, int power) {
  Monomial m = one(dim);
  m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::uint16_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  if (e.size() != m.e.size()) throw DimensionMismatch("Monomial::divides");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e.size() != o.e.size()) throw DimensionMismatch("Monomial::operator*");
  Monomial r(*this);
  for (std::size_t i = 0; i < e.size(); ++i)
    r.e[i] = static_cast<std::uint16_t>(r.e[i] + o.e[i]);
  return r;
}

Monomial Monomial::divide(const Monomial& o) const {
  if (e.size() != o.e.size()) throw DimensionMismatch("Monomial::divide");
  Monomial r(*this);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (r.e[i] < o.e[i]) throw Error("Monomial::divide: not divisible");
    r.e[i] = static_cast<std::uint16_t>(r.e[i] - o.e[i]);
  }
  return r;
}

Monomial lcm(const Monomial& m1, const Monomial& m2) {
  if (m1.e.size() != m2.e.size()) throw DimensionMismatch("lcm");
  Monomial r(m1);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], m2.e[i]);
  return r;
}

bool coprime(const Monomial& m1, const Monomial& m2) {
  if (m1.e.size() != m2.e.size()) throw DimensionMismatch("coprime");
  for (std::size_t i = 0; i < m1.e.size(); ++i)
    if (m1.e[i] != 0 && m2.e[i] != 0) return false;
  return true;
}

namespace {

int compare_lex(const Monomial& m1, const Monomial& m2) {
  for (std::size_t i = 0; i < m1.e.size(); ++i) {
    if (m1.e[i] != m2.e[i]) return m1.e[i] > m2.e[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& m1, const Monomial& m2, MonomialOrdering ord) {
  if (m1.e.size() != m2.e.size()) throw DimensionMismatch("compare: ring dimension");
  switch (ord) {
    case MonomialOrdering::Lex:
      return compare_lex(m1, m2);
    case MonomialOrdering::GrLex: {
      int d1 = m1.degree(), d2 = m2.degree();
      if (d1 != d2) return d1 > d2 ? 1 : -1;
      return compare_lex(m1, m2);
    }
    case MonomialOrdering::GRevLex: {
      int d1 = m1.degree(), d2 = m2.degree();
      if (d1 != d2) return d1 > d2 ? 1 : -1;
      // Larger = smaller exponent on the last differing variable.
      for (std::size_t i = m1.e.size(); i-- > 0;) {
        if (m1.e[i] != m2.e[i]) return m1.e[i] < m2.e[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

Polynomial::Polynomial(std::vector<Term> terms, int dim, MonomialOrdering ord)
    : terms_(std::move(terms)), dim_(dim), ord_(ord) {
  for (const Term& t : terms_)
    if (t.mono.dim() != dim_) throw DimensionMismatch("Polynomial: term dimension");
  normalize();
}

Polynomial Polynomial::constant(const Rational& c, int dim, MonomialOrdering ord) {
  Polynomial p(dim, ord);
  if (c != 0) p.terms_.push_back({Monomial::one(dim), c});
  return p;
}

Polynomial Polynomial::variable(int i, int dim, MonomialOrdering ord) {
  Polynomial p(dim, ord);
  p.terms_.push_back({Monomial::var(dim, i), Rational(1)});
  return p;
}

Polynomial Polynomial::term(const Rational& c, Monomial m, MonomialOrdering ord) {
  Polynomial p(m.dim(), ord);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("leading_monomial of zero polynomial");
  return terms_.front().mono;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading_coefficient of zero polynomial");
  return terms_.front().coeff;
}

Term Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading_term of zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::with_ordering(MonomialOrdering ord) const {
  if (ord == ord_) return *this;
  Polynomial p(terms_, dim_, ord);
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, ord_) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.coeff == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("polynomial ring dimension");
  if (a.ordering() != b.ordering()) throw Error("polynomial ordering mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(*this, o);
  Polynomial r(dim_, ord_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare(terms_[i].mono, o.terms_[j].mono, ord_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (m.dim() != dim_) throw DimensionMismatch("times_term");
  Polynomial r(dim_, ord_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  // Multiplying by a fixed monomial preserves the ordering of terms.
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(*this, o);
  Polynomial r(dim_, ord_);
  for (const Term& t : o.terms_) r = r + times_term(t.coeff, t.mono);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(*this);
  if (c == 0) return Polynomial(dim_, ord_);
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::operator+(const Rational& c) const {
  return *this + Polynomial::constant(c, dim_, ord_);
}

Polynomial Polynomial::operator-(const Rational& c) const {
  return *this + Polynomial::constant(-c, dim_, ord_);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (Rational(1) / leading_coefficient());
}

bool Polynomial::equal_terms(const Polynomial& o) const {
  // Compare as term multisets; ordering differences are irrelevant.
  if (terms_.size() != o.terms_.size()) return false;
  if (ord_ == o.ord_) {
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  return (*this - o.with_ordering(ord_)).is_zero();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool printed_coeff = false;
    if (c != 1 || t.mono.is_one()) {
      out << c;
      printed_coeff = true;
    }
    bool any_var = false;
    for (int i = 0; i < t.mono.dim(); ++i) {
      int p = t.mono.e[static_cast<std::size_t>(i)];
      if (p == 0) continue;
      if (printed_coeff || any_var) out << "*";
      out << "z" << (i + 1);
      if (p > 1) out << "^" << p;
      any_var = true;
    }
  }
  return out.str();
}

}  // namespace hrs
