#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair update (coprime and
// chain criteria) and sugar-degree pair selection.

#include <algorithm>
#include <optional>
#include <vector>

#include "scrollsec/groebner/ideal.hpp"

namespace scrollsec {

// Reduced Groebner basis: monic, no term of any element divisible by the
// leading monomial of another, sorted by descending leading monomial.
template <FieldContext Ctx>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<Ctx> ring, std::vector<Polynomial<Ctx>> basis, std::size_t pairs = 0)
      : ring_(std::move(ring)), basis_(std::move(basis)), pairs_processed_(pairs) {}

  const RingPtr<Ctx>& ring() const { return ring_; }
  const std::vector<Polynomial<Ctx>>& polynomials() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t pairs_processed() const { return pairs_processed_; }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis_) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.basis_ == b.basis_; }

 private:
  RingPtr<Ctx> ring_;
  std::vector<Polynomial<Ctx>> basis_;
  std::size_t pairs_processed_ = 0;
};

namespace detail {

template <FieldContext Ctx>
const Polynomial<Ctx>* find_reducer(const Monomial& m, const std::vector<const Polynomial<Ctx>*>& divisors) {
  for (const auto* g : divisors)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

// a - c * m * b over sorted term ranges.
template <FieldContext Ctx>
std::vector<Term<Ctx>> sub_scaled(const Term<Ctx>* a, const Term<Ctx>* a_end, const typename Ctx::value_type& c,
                                  const Monomial& m, const Term<Ctx>* b, const Term<Ctx>* b_end, const Ring<Ctx>& ring) {
  std::vector<Term<Ctx>> out;
  out.reserve(static_cast<std::size_t>((a_end - a) + (b_end - b)));
  bool have = false;
  Monomial mb;
  while (a != a_end || b != b_end) {
    if (b != b_end && !have) {
      mb = b->mono.times(m, ring.exponent_cap);
      have = true;
    }
    int cmp = a == a_end ? -1 : (b == b_end ? 1 : compare_monomials(a->mono, mb, ring.order));
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back({-(c * b->coeff), mb});
      ++b;
      have = false;
    } else {
      auto v = a->coeff - c * b->coeff;
      if (!v.is_zero()) out.push_back({v, a->mono});
      ++a;
      ++b;
      have = false;
    }
  }
  return out;
}

template <FieldContext Ctx>
Polynomial<Ctx> reduce_full(const Polynomial<Ctx>& p, const std::vector<const Polynomial<Ctx>*>& divisors) {
  using F = typename Ctx::value_type;
  const auto& ring = p.ring();
  std::vector<Term<Ctx>> cur = p.terms();
  std::vector<Term<Ctx>> done;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const auto& lt = cur[pos];
    if (const auto* g = find_reducer(lt.mono, divisors)) {
      F c = lt.coeff / g->leading_coefficient();
      Monomial m = lt.mono.divided_by(g->leading_monomial());
      const auto& gt = g->terms();
      // leading terms cancel exactly
      cur = sub_scaled<Ctx>(cur.data() + pos + 1, cur.data() + cur.size(), c, m, gt.data() + 1,
                            gt.data() + gt.size(), *ring);
      pos = 0;
    } else {
      done.push_back(lt);
      ++pos;
    }
  }
  // done is already strictly descending
  return Polynomial<Ctx>::from_sorted_terms(ring, std::move(done));
}

}  // namespace detail

// Remainder of multivariate division of f by the list G.
template <FieldContext Ctx>
Polynomial<Ctx> normal_form(const Polynomial<Ctx>& f, const std::vector<Polynomial<Ctx>>& G) {
  std::vector<const Polynomial<Ctx>*> divs;
  for (const auto& g : G) {
    f.check_ring(g);
    if (!g.is_zero()) divs.push_back(&g);
  }
  return detail::reduce_full(f, divs);
}

template <FieldContext Ctx>
Polynomial<Ctx> normal_form(const Polynomial<Ctx>& f, const GroebnerBasis<Ctx>& G) {
  return normal_form(f, G.polynomials());
}

template <FieldContext Ctx>
Polynomial<Ctx> s_polynomial(const Polynomial<Ctx>& f, const Polynomial<Ctx>& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  auto a = f.times_term(f.leading_coefficient().inverse(), l.divided_by(f.leading_monomial()));
  auto b = g.times_term(g.leading_coefficient().inverse(), l.divided_by(g.leading_monomial()));
  return a - b;
}

struct BuchbergerOptions {
  std::size_t pair_budget = kDefaultPairBudget;
};

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

template <FieldContext Ctx>
class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr<Ctx> ring, BuchbergerOptions opt) : ring_(std::move(ring)), opt_(opt) {}

  GroebnerBasis<Ctx> run(const std::vector<Polynomial<Ctx>>& gens) {
    // low degree generators first
    std::vector<Polynomial<Ctx>> input = gens;
    std::stable_sort(input.begin(), input.end(), [&](const auto& a, const auto& b) {
      return compare_monomials(a.leading_monomial(), b.leading_monomial(), ring_->order) < 0;
    });
    for (const auto& f : input) {
      auto h = reduce_full(f, active_divisors());
      if (!h.is_zero()) insert(h.monic(), static_cast<unsigned>(std::max(0, f.total_degree())));
    }
    while (!pairs_.empty()) {
      if (++processed_ > opt_.pair_budget)
        throw BudgetExceeded("S-pair budget of " + std::to_string(opt_.pair_budget) + " exceeded");
      CriticalPair p = pop_pair();
      auto h = reduce_full(s_polynomial(polys_[p.i], polys_[p.j]), active_divisors());
      if (!h.is_zero()) insert(h.monic(), p.sugar);
    }
    return finish();
  }

 private:
  std::vector<const Polynomial<Ctx>*> active_divisors() const {
    std::vector<const Polynomial<Ctx>*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  CriticalPair pop_pair() {
    auto best = pairs_.begin();
    for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
      if (it->sugar != best->sugar) {
        if (it->sugar < best->sugar) best = it;
      } else if (compare_monomials(it->lcm, best->lcm, ring_->order) < 0) {
        best = it;
      }
    }
    CriticalPair p = *best;
    *best = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    unsigned si = sugar_[i] + l.degree() - polys_[i].leading_monomial().degree();
    unsigned sj = sugar_[j] + l.degree() - polys_[j].leading_monomial().degree();
    return std::max(si, sj);
  }

  // Gebauer-Moeller update for a new basis element.
  void insert(Polynomial<Ctx> h, unsigned sugar) {
    const std::size_t hn = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial& lh = polys_[hn].leading_monomial();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t g = 0; g < hn; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      C.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    // chain criterion among the new pairs
    std::vector<Cand> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const auto& c = C[k];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < C.size() && keep; ++m)
          if (C[m].lcm.divides(c.lcm)) keep = false;
        for (std::size_t m = 0; m < D.size() && keep; ++m)
          if (D[m].lcm.divides(c.lcm)) keep = false;
      }
      if (keep) D.push_back(c);
    }
    // old pairs made redundant by h
    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(polys_[p.i].leading_monomial().lcm(lh) == p.lcm) &&
                  !(polys_[p.j].leading_monomial().lcm(lh) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (const auto& c : D)
      if (!c.coprime) pairs_.push_back({c.g, hn, c.lcm, pair_sugar(c.g, hn, c.lcm)});
    for (std::size_t g = 0; g < hn; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
  }

  GroebnerBasis<Ctx> finish() {
    std::vector<Polynomial<Ctx>> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(polys_[k]);
    std::vector<Polynomial<Ctx>> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial<Ctx>*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(&minimal[m]);
      // leading term is irreducible by the others; only the tail changes
      const auto& lead = minimal[k].leading_term();
      std::vector<Term<Ctx>> tail(minimal[k].terms().begin() + 1, minimal[k].terms().end());
      auto t = reduce_full(Polynomial<Ctx>::from_terms(ring_, std::move(tail)), others);
      reduced.push_back((Polynomial<Ctx>::monomial(ring_, lead.coeff, lead.mono) + t).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
      return compare_monomials(a.leading_monomial(), b.leading_monomial(), ring_->order) > 0;
    });
    return GroebnerBasis<Ctx>(ring_, std::move(reduced), processed_);
  }

  RingPtr<Ctx> ring_;
  BuchbergerOptions opt_;
  std::vector<Polynomial<Ctx>> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  std::size_t processed_ = 0;
};

}  // namespace detail

template <FieldContext Ctx>
GroebnerBasis<Ctx> buchberger(const Ideal<Ctx>& I, BuchbergerOptions opt = {}) {
  return detail::BuchbergerRun<Ctx>(I.ring(), opt).run(I.generators());
}

// Membership test against a Groebner basis.
template <FieldContext Ctx>
bool contains(const GroebnerBasis<Ctx>& G, const Polynomial<Ctx>& f) {
  return normal_form(f, G).is_zero();
}

// Buchberger criterion: every S-polynomial reduces to zero.
template <FieldContext Ctx>
bool satisfies_buchberger_criterion(const GroebnerBasis<Ctx>& G) {
  const auto& B = G.polynomials();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (!normal_form(s_polynomial(B[i], B[j]), B).is_zero()) return false;
  return true;
}

template <FieldContext Ctx>
bool is_reduced(const GroebnerBasis<Ctx>& G) {
  const auto& B = G.polynomials();
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (!B[i].leading_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : B[i].terms())
        if (B[j].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

// Same ideal: each generating set reduces to zero against the other's basis.
template <FieldContext Ctx>
bool same_ideal(const Ideal<Ctx>& a, const Ideal<Ctx>& b, BuchbergerOptions opt = {}) {
  auto ga = buchberger(a, opt);
  auto gb = buchberger(b, opt);
  for (const auto& f : b.generators())
    if (!contains(ga, f)) return false;
  for (const auto& f : a.generators())
    if (!contains(gb, f)) return false;
  return true;
}

}  // namespace scrollsec
