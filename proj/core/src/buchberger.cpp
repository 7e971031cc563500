#include "hrs/buchberger.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace hrs {

namespace {

// Division core; every divisor must already carry ord.
Polynomial reduce_ordered(Polynomial g, const std::vector<Polynomial>& divs,
                          MonomialOrdering ord) {
  std::vector<Term> remainder;
  while (!g.is_zero()) {
    bool divided = false;
    for (const Polynomial& p : divs) {
      if (p.leading_monomial().divides(g.leading_monomial())) {
        Rational c = g.leading_coefficient() / p.leading_coefficient();
        Monomial m = g.leading_monomial().divide(p.leading_monomial());
        g = g - p.times_term(c, m);
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.push_back(g.leading_term());
      g = g - Polynomial::term(remainder.back().coeff, remainder.back().mono, ord);
    }
  }
  return Polynomial(std::move(remainder), g.dim(), ord);
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& P,
                  MonomialOrdering ord) {
  if (P.empty()) throw Error("reduce: empty divisor list");
  for (const Polynomial& p : P) {
    if (p.dim() != f.dim()) throw DimensionMismatch("reduce");
    if (p.is_zero()) throw Error("reduce: zero divisor");
  }
  bool aligned = f.ordering() == ord;
  for (const Polynomial& p : P) aligned = aligned && p.ordering() == ord;
  if (aligned) return reduce_ordered(f, P, ord);

  std::vector<Polynomial> divs;
  divs.reserve(P.size());
  for (const Polynomial& p : P) divs.push_back(p.with_ordering(ord));
  return reduce_ordered(f.with_ordering(ord), divs, ord);
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q,
                        MonomialOrdering ord) {
  if (p.dim() != q.dim()) throw DimensionMismatch("s_polynomial");
  if (p.is_zero() || q.is_zero()) throw Error("s_polynomial: zero argument");
  Polynomial pp = p.with_ordering(ord), qq = q.with_ordering(ord);
  Monomial c = lcm(pp.leading_monomial(), qq.leading_monomial());
  Polynomial left =
      pp.times_term(Rational(1) / pp.leading_coefficient(), c.divide(pp.leading_monomial()));
  Polynomial right =
      qq.times_term(Rational(1) / qq.leading_coefficient(), c.divide(qq.leading_monomial()));
  return left - right;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm_lm;
};

std::vector<Polynomial> unit_result(int dim, MonomialOrdering ord) {
  return {Polynomial::constant(Rational(1), dim, ord)};
}

// Scale so all coefficients are coprime integers and the leading one is
// positive. Same ideal member up to a unit, but with the smallest exact
// representation.
Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  BigInt den = 1;
  for (const Term& t : f.terms())
    den = boost::multiprecision::lcm(den, denominator(t.coeff));
  BigInt num = 0;
  for (const Term& t : f.terms())
    num = boost::multiprecision::gcd(
        num, BigInt(numerator(t.coeff) * (den / denominator(t.coeff))));
  Rational scale(den, num);
  if (f.leading_coefficient() < 0) scale = -scale;
  return f * scale;
}

// Fraction-free normal form modulo primitive divisors: repeatedly rewrite the
// largest divisible monomial via a*g - c*m*p (all-integer), re-scaling to
// primitive form after every step so coefficients never blow up. The result
// is a normal form of g up to a positive scalar, which is all the basis
// completion loop needs.
// As below, but debits one unit from `remaining` per rewrite and gives up
// with nullopt when the budget runs dry mid-reduction.
std::optional<Polynomial> normal_form_limited(Polynomial g,
                                              const std::vector<Polynomial>& divs,
                                              MonomialOrdering ord,
                                              std::size_t& remaining);

Polynomial normal_form_primitive(Polynomial g, const std::vector<Polynomial>& divs,
                                 MonomialOrdering ord) {
  std::size_t unlimited = std::numeric_limits<std::size_t>::max();
  return *normal_form_limited(std::move(g), divs, ord, unlimited);
}

std::optional<Polynomial> normal_form_limited(Polynomial g,
                                              const std::vector<Polynomial>& divs,
                                              MonomialOrdering,
                                              std::size_t& remaining) {
  g = primitive_part(g);
  // Single descending sweep: a rewrite at position idx only rescales the
  // finalized prefix (same monomials) and injects strictly smaller monomials,
  // so terms before idx never need revisiting.
  std::size_t idx = 0;
  int steps_since_scaling = 0;
  while (idx < g.term_count()) {
    const Term& t = g.terms()[idx];
    const Polynomial* hit = nullptr;
    for (const Polynomial& p : divs) {
      if (p.leading_monomial().divides(t.mono)) {
        hit = &p;
        break;
      }
    }
    if (hit == nullptr) {
      ++idx;
      continue;
    }
    // Debit by the size of the polynomial being rewritten so a unit of
    // budget costs roughly constant time regardless of how large the
    // intermediate results grow.
    std::size_t debit = g.term_count();
    if (remaining < debit) return std::nullopt;
    remaining -= debit;
    Monomial m = t.mono.divide(hit->leading_monomial());
    const Rational& a = hit->leading_coefficient();
    if (a == 1) {
      g = g - hit->times_term(t.coeff, m);
    } else {
      g = g * a - hit->times_term(t.coeff, m);
      if (++steps_since_scaling == 8) {
        g = primitive_part(g);
        steps_since_scaling = 0;
      }
    }
  }
  return primitive_part(g);
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& P,
                                   MonomialOrdering ord) {
  auto G = buchberger_budgeted(P, ord, std::numeric_limits<std::size_t>::max());
  return std::move(*G);  // unlimited budget always completes
}

std::optional<std::vector<Polynomial>> buchberger_budgeted(
    const std::vector<Polynomial>& P, MonomialOrdering ord,
    std::size_t max_steps, std::size_t* steps_used) {
  if (P.empty()) throw Error("buchberger: empty input");
  std::size_t remaining = max_steps;
  auto used = [&] { return max_steps - remaining; };
  const int dim = P.front().dim();
  std::vector<Polynomial> G;
  for (const Polynomial& p : P) {
    if (p.dim() != dim) throw DimensionMismatch("buchberger");
    if (p.is_zero()) throw Error("buchberger: zero polynomial in input");
    Polynomial q = primitive_part(p.with_ordering(ord));
    if (q.is_constant()) {  // 1 is in the ideal
      if (steps_used) *steps_used = 0;
      return unit_result(dim, ord);
    }
    G.push_back(std::move(q));
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    const Monomial &a = G[i].leading_monomial(), &b = G[j].leading_monomial();
    if (coprime(a, b)) return;  // Buchberger's first criterion
    pending.push_back({i, j, lcm(a, b)});
    pending_keys.insert({i, j});
  };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return pending_keys.count({i, j}) != 0;
  };
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) enqueue(i, j);

  while (!pending.empty()) {
    // Normal strategy: smallest LCM of leading monomials first.
    std::size_t best = 0;
    for (std::size_t t = 1; t < pending.size(); ++t)
      if (compare(pending[t].lcm_lm, pending[best].lcm_lm, ord) < 0) best = t;
    Pair sel = pending[best];
    pending[best] = pending.back();
    pending.pop_back();
    pending_keys.erase({sel.i, sel.j});

    // Buchberger's chain criterion: (i, j) is redundant when some other
    // member's leading monomial divides lcm(LM_i, LM_j) and both pairs it
    // forms with i and j have already been handled.
    bool chained = false;
    for (std::size_t t = 0; t < G.size() && !chained; ++t) {
      if (t == sel.i || t == sel.j) continue;
      chained = G[t].leading_monomial().divides(sel.lcm_lm) &&
                !is_pending(sel.i, t) && !is_pending(sel.j, t);
    }
    if (chained) continue;

    Polynomial s = s_polynomial(G[sel.i], G[sel.j], ord);
    if (s.is_zero()) continue;
    std::optional<Polynomial> r = normal_form_limited(std::move(s), G, ord, remaining);
    if (!r) {
      if (steps_used) *steps_used = used();
      return std::nullopt;
    }
    if (r->is_zero()) continue;
    if (r->is_constant()) {
      if (steps_used) *steps_used = used();
      return unit_result(dim, ord);
    }
    std::size_t idx = G.size();
    G.push_back(std::move(*r));
    for (std::size_t i = 0; i < idx; ++i) enqueue(i, idx);
  }
  if (steps_used) *steps_used = used();
  return G;
}

bool is_groebner_basis(const std::vector<Polynomial>& G, MonomialOrdering ord) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (coprime(G[i].leading_monomial(), G[j].leading_monomial())) continue;
      Polynomial s = s_polynomial(G[i], G[j], ord);
      if (!s.is_zero() && !reduce(s, G, ord).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G,
                                     MonomialOrdering ord, bool verify) {
  if (G.empty()) throw Error("reduce_basis: empty basis");
  std::vector<Polynomial> work;
  for (const Polynomial& g : G) {
    if (g.is_zero()) continue;
    work.push_back(g.with_ordering(ord).monic());
  }
  if (work.empty()) throw Error("reduce_basis: all polynomials zero");
  if (verify && !is_groebner_basis(work, ord))
    throw NotAGroebnerBasis("reduce_basis: an S-pair does not reduce to 0");

  // Minimalize: drop members whose leading monomial another member divides.
  std::sort(work.begin(), work.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), ord) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : work) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(g);
  }

  // Interreduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) break;
      Polynomial r = reduce(minimal[i], others, ord);
      if (r.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      Polynomial rm = r.monic();
      if (rm != minimal[i]) {
        minimal[i] = rm;
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), ord) < 0;
  });
  return minimal;
}

bool is_unit_basis(const std::vector<Polynomial>& reduced) {
  return reduced.size() == 1 && reduced.front().is_constant() &&
         !reduced.front().is_zero();
}

}  // namespace hrs
