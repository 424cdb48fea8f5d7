#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scrollsec/algebra/monomial.hpp"
#include "scrollsec/algebra/scalar.hpp"

namespace scrollsec {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Variable names, monomial order and coefficient field shared by a family of
// polynomials. Immutable once built; polynomials hold it by shared pointer.
template <FieldContext Ctx>
struct Ring {
  std::vector<std::string> names;
  MonomialOrder order = MonomialOrder::grevlex();
  Ctx ctx{};
  unsigned exponent_cap = kDefaultExponentCap;

  std::size_t nvars() const { return names.size(); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
  }
  bool has(const std::string& name) const { return std::find(names.begin(), names.end(), name) != names.end(); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names == b.names && a.order == b.order && a.ctx == b.ctx && a.exponent_cap == b.exponent_cap;
  }
};

template <FieldContext Ctx>
using RingPtr = std::shared_ptr<const Ring<Ctx>>;

template <FieldContext Ctx>
RingPtr<Ctx> make_ring(std::vector<std::string> names, Ctx ctx = {},
                       MonomialOrder order = MonomialOrder::grevlex(), unsigned cap = kDefaultExponentCap) {
  if (names.size() > kMaxVars) throw std::invalid_argument("at most 32 variables are supported");
  if (cap > 127) throw std::invalid_argument("exponent cap must be below 128");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name '" + names[i] + "'");
  return std::make_shared<const Ring<Ctx>>(Ring<Ctx>{std::move(names), order, ctx, cap});
}

// Same variables and field, different order.
template <FieldContext Ctx>
RingPtr<Ctx> with_order(const RingPtr<Ctx>& ring, MonomialOrder order) {
  return make_ring<Ctx>(ring->names, ring->ctx, order, ring->exponent_cap);
}

// Numbered variable names: prefix0, prefix1, ...
inline std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n, std::size_t first = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

template <FieldContext Ctx>
struct Term {
  using F = typename Ctx::value_type;
  F coeff;
  Monomial mono;
};

// Sparse multivariate polynomial: nonzero terms in strictly descending order
// under the ring's monomial order.
template <FieldContext Ctx>
class Polynomial {
 public:
  using F = typename Ctx::value_type;
  using TermT = Term<Ctx>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<Ctx> ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const RingPtr<Ctx>& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr<Ctx>& ring, const F& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({c, Monomial(ring->nvars())});
    return p;
  }
  static Polynomial constant(const RingPtr<Ctx>& ring, std::int64_t c) { return constant(ring, ring->ctx.from_int(c)); }
  static Polynomial variable(const RingPtr<Ctx>& ring, std::size_t i) {
    Polynomial p(ring);
    p.terms_.push_back({ring->ctx.from_int(1), Monomial::variable(ring->nvars(), i)});
    return p;
  }
  static Polynomial variable(const RingPtr<Ctx>& ring, const std::string& name) {
    return variable(ring, ring->index_of(name));
  }
  static Polynomial monomial(const RingPtr<Ctx>& ring, const F& c, const Monomial& m) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({c, m});
    return p;
  }
  // Terms in any order, duplicates allowed; normalized here.
  static Polynomial from_terms(const RingPtr<Ctx>& ring, std::vector<TermT> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  // Caller guarantees strictly descending order and nonzero coefficients.
  static Polynomial from_sorted_terms(const RingPtr<Ctx>& ring, std::vector<TermT> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<Ctx>& ring() const { return ring_; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const TermT& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const F& leading_coefficient() const { return leading_term().coeff; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  F coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return ring_->ctx.from_int(0);
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    F inv = leading_coefficient().inverse();
    return scaled(inv);
  }

  Polynomial scaled(const F& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono});
    return r;
  }

  // c * m * this
  Polynomial times_term(const F& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono.times(m, ring_->exponent_cap)});
    return r;
  }

  // this - c * m * g, a single merge pass (the workhorse of reduction).
  Polynomial minus_term_times(const F& c, const Monomial& m, const Polynomial& g) const {
    check_ring(g);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    const auto& ord = ring_->order;
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    while (i != terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end()) {
        r.terms_.push_back(*i++);
        continue;
      }
      Monomial mj = j->mono.times(m, ring_->exponent_cap);
      int cmp = i == terms_.end() ? -1 : compare_monomials(i->mono, mj, ord);
      if (cmp > 0) {
        r.terms_.push_back(*i++);
      } else if (cmp < 0) {
        r.terms_.push_back({-(c * j->coeff), mj});
        ++j;
      } else {
        F v = i->coeff - c * j->coeff;
        if (!v.is_zero()) r.terms_.push_back({v, i->mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    return a.minus_term_times(a.ring_->ctx.from_int(-1), Monomial(a.ring_->nvars()), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    return a.minus_term_times(a.ring_->ctx.from_int(1), Monomial(a.ring_->nvars()), b);
  }
  Polynomial operator-() const { return scaled(ring_->ctx.from_int(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (a.size() == 1) return b.times_term(a.terms_[0].coeff, a.terms_[0].mono);
    if (b.size() == 1) return a.times_term(b.terms_[0].coeff, b.terms_[0].mono);
    std::vector<TermT> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.coeff * t.coeff, s.mono.times(t.mono, a.ring_->exponent_cap)});
    return from_terms(a.ring_, std::move(prod));
  }
  friend Polynomial operator*(const F& c, const Polynomial& p) { return p.scaled(c); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, 1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return a.terms_.empty() || a.same_ring(b);
  }

  bool same_ring(const Polynomial& o) const { return ring_ == o.ring_ || (ring_ && o.ring_ && *ring_ == *o.ring_); }
  void check_ring(const Polynomial& o) const {
    if (!same_ring(o)) throw RingMismatch("polynomials live in different rings");
  }

 private:
  void normalize() {
    const auto& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const TermT& x, const TermT& y) { return compare_monomials(x.mono, y.mono, ord) > 0; });
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr<Ctx> ring_;
  std::vector<TermT> terms_;
};

using PolyP = Polynomial<ModContext>;
using PolyQ = Polynomial<RationalContext>;
using PolyMod = Polynomial<ModContext>;

// Evaluation at a point; the point has one entry per ring variable.
template <FieldContext Ctx>
typename Ctx::value_type eval(const Polynomial<Ctx>& f, std::span<const typename Ctx::value_type> point) {
  using F = typename Ctx::value_type;
  const auto& ring = *f.ring();
  if (point.size() != ring.nvars())
    throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                std::to_string(ring.nvars()) + " variables");
  // powers table per variable, built lazily up to the degree needed
  std::vector<std::vector<F>> pw(ring.nvars());
  F acc = ring.ctx.from_int(0);
  for (const auto& t : f.terms()) {
    F v = t.coeff;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      auto& table = pw[i];
      if (table.empty()) table.push_back(ring.ctx.from_int(1));
      while (table.size() <= e) table.push_back(table.back() * point[i]);
      v *= table[e];
    }
    acc += v;
  }
  return acc;
}

template <FieldContext Ctx>
typename Ctx::value_type eval(const Polynomial<Ctx>& f, const std::vector<typename Ctx::value_type>& point) {
  return eval(f, std::span<const typename Ctx::value_type>(point));
}

// Replace every variable by a polynomial over a common target ring.
// `images[i]` is the image of variable i of f's ring.
template <FieldContext Ctx>
Polynomial<Ctx> substitute(const Polynomial<Ctx>& f, const std::vector<Polynomial<Ctx>>& images,
                           const RingPtr<Ctx>& target) {
  const auto& ring = *f.ring();
  if (images.size() != ring.nvars())
    throw std::invalid_argument("substitution needs one image per variable (" + std::to_string(ring.nvars()) + ")");
  for (const auto& im : images)
    if (!im.is_zero() && !(*im.ring() == *target)) throw RingMismatch("substitution images live in different rings");
  std::vector<std::vector<Polynomial<Ctx>>> pw(ring.nvars());
  Polynomial<Ctx> acc(target);
  for (const auto& t : f.terms()) {
    Polynomial<Ctx> v = Polynomial<Ctx>::constant(target, t.coeff);
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      auto& table = pw[i];
      if (table.empty()) table.push_back(Polynomial<Ctx>::constant(target, 1));
      while (table.size() <= e) table.push_back(table.back() * images[i]);
      v *= table[e];
    }
    acc += v;
  }
  return acc;
}

// Substitution by variable name; variables of f without an image are an
// error.
template <FieldContext Ctx>
Polynomial<Ctx> substitute(const Polynomial<Ctx>& f, const std::map<std::string, Polynomial<Ctx>>& images,
                           const RingPtr<Ctx>& target) {
  std::vector<Polynomial<Ctx>> ims;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    const auto& name = f.ring()->names[i];
    auto it = images.find(name);
    if (it == images.end()) {
      if (f.degree_in(i) == 0) {
        ims.push_back(Polynomial<Ctx>::zero(target));
        continue;
      }
      throw std::invalid_argument("missing image for variable '" + name + "'");
    }
    ims.push_back(it->second);
  }
  return substitute(f, ims, target);
}

// Move f into another ring; every variable of f that occurs must exist there
// under the same name.
template <FieldContext Ctx>
Polynomial<Ctx> change_ring(const Polynomial<Ctx>& f, const RingPtr<Ctx>& target) {
  const auto& src = *f.ring();
  std::vector<int> map(src.nvars(), -1);
  for (std::size_t i = 0; i < src.nvars(); ++i)
    if (target->has(src.names[i])) map[i] = static_cast<int>(target->index_of(src.names[i]));
  std::vector<Term<Ctx>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("variable '" + src.names[i] + "' missing from target ring");
      m.set(static_cast<std::size_t>(map[i]), t.mono[i], target->exponent_cap);
    }
    terms.push_back({t.coeff, m});
  }
  return Polynomial<Ctx>::from_terms(target, std::move(terms));
}

template <FieldContext Ctx>
Polynomial<Ctx> partial_derivative(const Polynomial<Ctx>& f, std::size_t var) {
  const auto& ring = f.ring();
  if (var >= ring->nvars()) throw std::invalid_argument("unknown variable index " + std::to_string(var));
  std::vector<Term<Ctx>> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    auto c = t.coeff * ring->ctx.from_int(e);
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    m.set(var, e - 1, ring->exponent_cap);
    terms.push_back({c, m});
  }
  // dropping one exponent preserves relative order except for collisions,
  // which cannot occur; re-sorting keeps the invariant explicit anyway
  return Polynomial<Ctx>::from_terms(ring, std::move(terms));
}

template <FieldContext Ctx>
Polynomial<Ctx> partial_derivative(const Polynomial<Ctx>& f, const std::string& var) {
  return partial_derivative(f, f.ring()->index_of(var));
}

}  // namespace scrollsec
