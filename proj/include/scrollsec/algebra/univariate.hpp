#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "scrollsec/algebra/polynomial.hpp"

namespace scrollsec {

// Dense univariate polynomial, coefficients from the constant term up.
// Eliminants can exceed the multivariate exponent cap, so they live here.
template <FieldContext Ctx>
class Univariate {
 public:
  using F = typename Ctx::value_type;

  Univariate() = default;
  Univariate(Ctx ctx, std::vector<F> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { trim(); }

  static Univariate x_power(Ctx ctx, std::size_t e) {
    std::vector<F> c(e + 1, ctx.from_int(0));
    c[e] = ctx.from_int(1);
    return Univariate(ctx, std::move(c));
  }

  const Ctx& context() const { return ctx_; }
  const std::vector<F>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& leading() const { return c_.back(); }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_.from_int(0); }

  Univariate monic() const {
    if (is_zero()) return *this;
    F inv = leading().inverse();
    std::vector<F> c = c_;
    for (auto& v : c) v *= inv;
    return Univariate(ctx_, std::move(c));
  }

  Univariate derivative() const {
    std::vector<F> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * ctx_.from_int(static_cast<std::int64_t>(i)));
    return Univariate(ctx_, std::move(c));
  }

  F eval(const F& x) const {
    F acc = ctx_.from_int(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Euclidean division: this = q * d + r with deg r < deg d.
  std::pair<Univariate, Univariate> divmod(const Univariate& d) const {
    if (d.is_zero()) throw ArithmeticError("univariate division by zero");
    std::vector<F> r = c_;
    if (degree() < d.degree()) return {Univariate(ctx_, {}), *this};
    std::vector<F> q(static_cast<std::size_t>(degree() - d.degree() + 1), ctx_.from_int(0));
    F inv = d.leading().inverse();
    for (int i = degree(); i >= d.degree(); --i) {
      F coef = r[static_cast<std::size_t>(i)] * inv;
      std::size_t shift = static_cast<std::size_t>(i - d.degree());
      q[shift] = coef;
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[shift + j] -= coef * d.c_[j];
    }
    return {Univariate(ctx_, std::move(q)), Univariate(ctx_, std::move(r))};
  }

  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return Univariate(a.ctx_, {});
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, a.ctx_.from_int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Univariate(a.ctx_, std::move(c));
  }
  friend Univariate operator-(const Univariate& a, const Univariate& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), a.ctx_.from_int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Univariate(a.ctx_, std::move(c));
  }
  friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Ctx ctx_{};
  std::vector<F> c_;
};

// Monic gcd by the Euclidean algorithm.
template <FieldContext Ctx>
Univariate<Ctx> univariate_gcd(Univariate<Ctx> f, Univariate<Ctx> g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    auto r = f.divmod(g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

template <FieldContext Ctx>
bool is_squarefree(const Univariate<Ctx>& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  return univariate_gcd(f, f.derivative()).degree() == 0;
}

// Dense view of a polynomial that involves at most one variable (`var`).
template <FieldContext Ctx>
Univariate<Ctx> to_univariate(const Polynomial<Ctx>& f, std::size_t var) {
  const auto& ctx = f.ring()->ctx;
  std::vector<typename Ctx::value_type> c;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != t.mono[var]) throw std::invalid_argument("polynomial is not univariate in the given variable");
    std::size_t e = t.mono[var];
    if (c.size() <= e) c.resize(e + 1, ctx.from_int(0));
    c[e] += t.coeff;
  }
  return Univariate<Ctx>(ctx, std::move(c));
}

// Single variable that f involves (0 for constants).
template <FieldContext Ctx>
std::size_t sole_variable(const Polynomial<Ctx>& f) {
  std::size_t found = 0;
  bool any = false;
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) {
        if (any && found != i) throw std::invalid_argument("polynomial involves more than one variable");
        found = i;
        any = true;
      }
  return found;
}

template <FieldContext Ctx>
Polynomial<Ctx> from_univariate(const Univariate<Ctx>& u, const RingPtr<Ctx>& ring, std::size_t var) {
  std::vector<Term<Ctx>> terms;
  for (std::size_t e = 0; e < u.coeffs().size(); ++e)
    if (!u.coeffs()[e].is_zero())
      terms.push_back({u.coeffs()[e], Monomial::variable(ring->nvars(), var, static_cast<unsigned>(e))});
  return Polynomial<Ctx>::from_terms(ring, std::move(terms));
}

// gcd of two polynomials in the same single variable, returned monic in the
// ring of the inputs.
template <FieldContext Ctx>
Polynomial<Ctx> univariate_gcd(const Polynomial<Ctx>& f, const Polynomial<Ctx>& g) {
  f.check_ring(g);
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  std::size_t vf = sole_variable(f), vg = sole_variable(g);
  std::size_t var = f.is_constant() ? vg : vf;
  if (!f.is_constant() && !g.is_constant() && vf != vg) throw std::invalid_argument("gcd inputs use different variables");
  return from_univariate(univariate_gcd(to_univariate(f, var), to_univariate(g, var)), f.ring(), var);
}

}  // namespace scrollsec
